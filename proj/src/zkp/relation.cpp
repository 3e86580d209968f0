#include "zkp/relation.hpp"

#include <cstring>

#include "ledger/address.hpp"

namespace anoncrowd::zkp {

namespace {

constexpr size_t kPrefixLen = 32;

Bytes digest_bytes(const crypto::Digest& d) { return Bytes(d.begin(), d.end()); }

crypto::Digest digest_from(const Bytes& b) {
    if (b.size() != 32) throw DecodeError("digest field must be 32 bytes");
    crypto::Digest d;
    std::memcpy(d.data(), b.data(), d.size());
    return d;
}

std::array<uint8_t, 20> address_from(const Bytes& b) {
    if (b.size() != 20) throw DecodeError("address field must be 20 bytes");
    std::array<uint8_t, 20> a;
    std::memcpy(a.data(), b.data(), a.size());
    return a;
}

// A plaintext is properly signed for `addr` when it parses as a signed
// answer or signed bid whose embedded key both matches the address and
// verifies the signature.
bool properly_signed(ByteView plaintext, const std::array<uint8_t, 20>& addr) {
    if (auto ans = parse_answer_payload(plaintext)) {
        return ledger::derive_address(ans->pk) == addr &&
               crypto::verify_sig(ans->pk, answer_message_bytes(ans->answer), ans->sig);
    }
    if (auto bid = parse_bid_payload(plaintext)) {
        return ledger::derive_address(bid->pk) == addr &&
               crypto::verify_sig(bid->pk, bid_message_bytes(bid->bid), bid->sig);
    }
    return false;
}

bool eval_auth(const Statement& x, const Witness& w) {
    AuthStatement st = decode_auth_statement(x.public_inputs);
    Decoder wd(w.private_inputs);
    AuthWitness wit;
    wit.sk = wd.bytes();
    wit.pk = wd.bytes();
    wit.cert_sig = wd.bytes();
    wd.expect_end();

    if (st.message.size() < kPrefixLen) return false;
    if (!crypto::verify_sig(st.mpk, wit.pk, wit.cert_sig)) return false;  // CertVrfy
    if (!crypto::pair(wit.pk, wit.sk)) return false;
    ByteView prefix(st.message.data(), kPrefixLen);
    return st.t1 == linkage_tag(prefix, wit.sk) && st.t2 == linkage_tag(st.message, wit.sk);
}

bool eval_reward(const Statement& x, const Witness& w) {
    RewardStatement st = decode_reward_statement(x.public_inputs);
    Decoder wd(w.private_inputs);
    Bytes esk = wd.bytes();
    wd.expect_end();

    if (!crypto::pair(st.epk, esk)) return false;

    std::vector<incentive::Answer> answers;
    answers.reserve(st.ciphertexts.size());
    for (const CiphertextSlot& slot : st.ciphertexts) {
        if (!slot) {
            answers.push_back(std::nullopt);
            continue;
        }
        Bytes plaintext;
        try {
            plaintext = crypto::decrypt(esk, *slot);
        } catch (const crypto::CryptoError&) {
            return false;
        }
        auto payload = parse_answer_payload(plaintext);
        if (!payload) return false;
        answers.push_back(payload->answer);
    }
    return incentive::evaluate(st.policy, answers, st.tau) == st.rewards;
}

bool eval_fake(const Statement& x, const Witness& w) {
    FakeStatement st = decode_fake_statement(x.public_inputs);
    Decoder wd(w.private_inputs);
    Bytes esk = wd.bytes();
    wd.expect_end();

    if (!crypto::pair(st.epk, esk)) return false;
    Bytes plaintext;
    try {
        plaintext = crypto::decrypt(esk, st.ciphertext);
    } catch (const crypto::CryptoError&) {
        return true;  // undecryptable submissions count as fake
    }
    return !properly_signed(plaintext, st.claimed_address);
}

bool eval_auction(const Statement& x, const Witness& w) {
    AuctionStatement st = decode_auction_statement(x.public_inputs);
    Decoder wd(w.private_inputs);
    Bytes esk = wd.bytes();
    wd.expect_end();

    if (!crypto::pair(st.epk, esk)) return false;

    std::vector<uint64_t> bids;
    bids.reserve(st.bid_ciphertexts.size());
    for (const Bytes& ct : st.bid_ciphertexts) {
        Bytes plaintext;
        try {
            plaintext = crypto::decrypt(esk, ct);
        } catch (const crypto::CryptoError&) {
            return false;
        }
        auto payload = parse_bid_payload(plaintext);
        if (!payload) return false;
        bids.push_back(payload->bid);
    }

    auto expected = incentive::evaluate_auction_selection(bids, st.k, st.tau);
    if (!expected) return false;
    if (st.selection.size() != expected->indices.size()) return false;
    for (size_t i = 0; i < st.selection.size(); ++i) {
        if (st.selection[i].bidder_index != expected->indices[i]) return false;
        if (st.selection[i].payment != expected->payments[i]) return false;
    }
    return true;
}

}  // namespace

crypto::Digest linkage_tag(ByteView data, ByteView sk) {
    uint8_t len_le[8];
    for (int i = 0; i < 8; ++i) len_le[i] = uint8_t(uint64_t(data.size()) >> (8 * i));
    return crypto::hash_concat({ByteView(len_le, 8), data, sk});
}

const char* relation_name(RelationId id) {
    switch (id) {
        case RelationId::Auth: return "auth";
        case RelationId::Reward: return "reward";
        case RelationId::Fake: return "fake";
        case RelationId::Auction: return "auction";
    }
    return "unknown";
}

Bytes Proof::serialize() const {
    Bytes out;
    out.reserve(kProofLen);
    out.push_back(uint8_t(relation_id));
    out.insert(out.end(), tag.begin(), tag.end());
    return out;
}

std::optional<Proof> Proof::parse(ByteView data) {
    if (data.size() != kProofLen) return std::nullopt;
    if (data[0] < 1 || data[0] > 4) return std::nullopt;
    Proof p;
    p.relation_id = RelationId(data[0]);
    std::memcpy(p.tag.data(), data.data() + 1, kProofTagLen);
    return p;
}

Statement encode_statement(const AuthStatement& st) {
    Encoder enc;
    enc.bytes(digest_bytes(st.t1)).bytes(digest_bytes(st.t2)).bytes(st.message).bytes(st.mpk);
    return Statement{RelationId::Auth, enc.take()};
}

Statement encode_statement(const RewardStatement& st) {
    Encoder enc;
    enc.bytes(st.epk).u64(st.tau).u32(uint32_t(st.ciphertexts.size()));
    for (const CiphertextSlot& slot : st.ciphertexts) enc.opt_bytes(slot);
    if (st.rewards.size() != st.ciphertexts.size())
        throw DecodeError("reward vector length mismatch");
    for (uint64_t r : st.rewards) enc.u64(r);
    st.policy.encode_into(enc);
    return Statement{RelationId::Reward, enc.take()};
}

Statement encode_statement(const FakeStatement& st) {
    Encoder enc;
    enc.bytes(st.ciphertext).bytes(st.epk).bytes(
        ByteView(st.claimed_address.data(), st.claimed_address.size()));
    return Statement{RelationId::Fake, enc.take()};
}

Statement encode_statement(const AuctionStatement& st) {
    Encoder enc;
    enc.bytes(st.epk).u64(st.tau).u32(uint32_t(st.bid_ciphertexts.size()));
    for (const Bytes& ct : st.bid_ciphertexts) enc.bytes(ct);
    if (st.bidders.size() != st.bid_ciphertexts.size())
        throw DecodeError("bidder list length mismatch");
    for (const auto& addr : st.bidders) enc.bytes(ByteView(addr.data(), addr.size()));
    enc.u32(st.k);
    enc.u32(uint32_t(st.selection.size()));
    for (const SelectionEntry& e : st.selection) enc.u32(e.bidder_index).u64(e.payment);
    return Statement{RelationId::Auction, enc.take()};
}

Witness encode_witness(const AuthWitness& w) {
    Encoder enc;
    enc.bytes(w.sk).bytes(w.pk).bytes(w.cert_sig);
    return Witness{RelationId::Auth, enc.take()};
}

Witness encode_witness(RelationId relation, const EskWitness& w) {
    Encoder enc;
    enc.bytes(w.esk);
    return Witness{relation, enc.take()};
}

AuthStatement decode_auth_statement(ByteView data) {
    Decoder dec(data);
    AuthStatement st;
    st.t1 = digest_from(dec.bytes());
    st.t2 = digest_from(dec.bytes());
    st.message = dec.bytes();
    st.mpk = dec.bytes();
    dec.expect_end();
    return st;
}

RewardStatement decode_reward_statement(ByteView data) {
    Decoder dec(data);
    RewardStatement st;
    st.epk = dec.bytes();
    st.tau = dec.u64();
    uint32_t n = dec.u32();
    st.ciphertexts.reserve(n);
    for (uint32_t i = 0; i < n; ++i) st.ciphertexts.push_back(dec.opt_bytes());
    st.rewards.reserve(n);
    for (uint32_t i = 0; i < n; ++i) st.rewards.push_back(dec.u64());
    st.policy = incentive::PolicySpec::decode_from(dec);
    dec.expect_end();
    return st;
}

FakeStatement decode_fake_statement(ByteView data) {
    Decoder dec(data);
    FakeStatement st;
    st.ciphertext = dec.bytes();
    st.epk = dec.bytes();
    st.claimed_address = address_from(dec.bytes());
    dec.expect_end();
    return st;
}

AuctionStatement decode_auction_statement(ByteView data) {
    Decoder dec(data);
    AuctionStatement st;
    st.epk = dec.bytes();
    st.tau = dec.u64();
    uint32_t m = dec.u32();
    for (uint32_t i = 0; i < m; ++i) st.bid_ciphertexts.push_back(dec.bytes());
    for (uint32_t i = 0; i < m; ++i) st.bidders.push_back(address_from(dec.bytes()));
    st.k = dec.u32();
    uint32_t s = dec.u32();
    for (uint32_t i = 0; i < s; ++i) {
        SelectionEntry e;
        e.bidder_index = dec.u32();
        e.payment = dec.u64();
        st.selection.push_back(e);
    }
    dec.expect_end();
    return st;
}

Bytes answer_message_bytes(uint32_t answer) {
    Bytes out(4);
    for (int i = 0; i < 4; ++i) out[i] = uint8_t(answer >> (8 * i));
    return out;
}

Bytes bid_message_bytes(uint64_t bid) {
    Bytes out(8);
    for (int i = 0; i < 8; ++i) out[i] = uint8_t(bid >> (8 * i));
    return out;
}

Bytes encode_answer_payload(uint32_t answer, ByteView signer_pk, ByteView sig) {
    Bytes out = answer_message_bytes(answer);
    append(out, signer_pk);
    append(out, sig);
    return out;
}

Bytes encode_bid_payload(uint64_t bid, ByteView signer_pk, ByteView sig) {
    Bytes out = bid_message_bytes(bid);
    append(out, signer_pk);
    append(out, sig);
    return out;
}

std::optional<AnswerPayload> parse_answer_payload(ByteView plaintext) {
    constexpr size_t kLen = 4 + crypto::kSigPublicKeyLen + crypto::kSignatureLen;
    if (plaintext.size() != kLen) return std::nullopt;
    AnswerPayload p;
    for (int i = 0; i < 4; ++i) p.answer |= uint32_t(plaintext[i]) << (8 * i);
    p.pk = to_bytes(plaintext.subspan(4, crypto::kSigPublicKeyLen));
    p.sig = to_bytes(plaintext.subspan(4 + crypto::kSigPublicKeyLen));
    return p;
}

std::optional<BidPayload> parse_bid_payload(ByteView plaintext) {
    constexpr size_t kLen = 8 + crypto::kSigPublicKeyLen + crypto::kSignatureLen;
    if (plaintext.size() != kLen) return std::nullopt;
    BidPayload p;
    for (int i = 0; i < 8; ++i) p.bid |= uint64_t(plaintext[i]) << (8 * i);
    p.pk = to_bytes(plaintext.subspan(8, crypto::kSigPublicKeyLen));
    p.sig = to_bytes(plaintext.subspan(8 + crypto::kSigPublicKeyLen));
    return p;
}

bool eval_relation(RelationId id, const Statement& x, const Witness& w) {
    if (x.relation_id != id || w.relation_id != id) return false;
    switch (id) {
        case RelationId::Auth: return eval_auth(x, w);
        case RelationId::Reward: return eval_reward(x, w);
        case RelationId::Fake: return eval_fake(x, w);
        case RelationId::Auction: return eval_auction(x, w);
    }
    return false;
}

}  // namespace anoncrowd::zkp
