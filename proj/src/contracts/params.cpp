#include "contracts/params.hpp"

namespace anoncrowd::contracts {

bool TaskParams::valid() const {
    if (n < 1) return false;
    if (t_answer == 0 || t_instruct == 0) return false;
    if (kind == TaskKind::Auction && t_bid == 0) return false;
    if (kind == TaskKind::Auction && policy.id != incentive::PolicyId::AuctionLowestK)
        return false;
    if (kind == TaskKind::Quality && policy.id == incentive::PolicyId::AuctionLowestK)
        return false;
    return true;
}

Bytes TaskParams::encode() const {
    Encoder enc;
    enc.u8(uint8_t(kind));
    enc.bytes(ByteView(alpha_R.data(), alpha_R.size()));
    enc.bytes(pi_R.serialize());
    enc.bytes(mpk);
    enc.u64(tau);
    enc.bytes(epk);
    pp_auth.encode_into(enc);
    pp_fake.encode_into(enc);
    pp_settle.encode_into(enc);
    enc.u32(n);
    enc.u64(t_answer).u64(t_instruct).u64(t_bid);
    policy.encode_into(enc);
    return enc.take();
}

TaskParams TaskParams::decode(ByteView payload) {
    Decoder dec(payload);
    TaskParams p;
    uint8_t kind = dec.u8();
    if (kind != 1 && kind != 2) throw DecodeError("unknown task kind");
    p.kind = TaskKind(kind);
    Bytes addr = dec.bytes();
    if (addr.size() != p.alpha_R.size()) throw DecodeError("bad requester address");
    std::copy(addr.begin(), addr.end(), p.alpha_R.begin());
    auto att = cpla::Attestation::parse(dec.bytes());
    if (!att) throw DecodeError("bad publish attestation");
    p.pi_R = *att;
    p.mpk = dec.bytes();
    p.tau = dec.u64();
    p.epk = dec.bytes();
    p.pp_auth = zkp::PublicParams::decode_from(dec);
    p.pp_fake = zkp::PublicParams::decode_from(dec);
    p.pp_settle = zkp::PublicParams::decode_from(dec);
    p.n = dec.u32();
    p.t_answer = dec.u64();
    p.t_instruct = dec.u64();
    p.t_bid = dec.u64();
    p.policy = incentive::PolicySpec::decode_from(dec);
    dec.expect_end();
    return p;
}

crypto::Digest task_prefix(const ledger::Address& contract) {
    return crypto::hash(ByteView(contract.data(), contract.size()));
}

Bytes publish_message(const ledger::Address& contract, const ledger::Address& alpha_R) {
    crypto::Digest prefix = task_prefix(contract);
    Bytes msg(prefix.begin(), prefix.end());
    msg.insert(msg.end(), alpha_R.begin(), alpha_R.end());
    return msg;
}

Bytes submit_message(const ledger::Address& contract, const ledger::Address& sender,
                     ByteView ciphertext) {
    crypto::Digest prefix = task_prefix(contract);
    Bytes msg(prefix.begin(), prefix.end());
    msg.insert(msg.end(), sender.begin(), sender.end());
    append(msg, ciphertext);
    return msg;
}

Bytes encode_submit_call(const cpla::Attestation& att, ByteView ciphertext) {
    Encoder enc;
    enc.u8(uint8_t(Op::Submit)).bytes(att.serialize()).bytes(ciphertext);
    return enc.take();
}

Bytes encode_fake_call(uint32_t index, const zkp::Proof& proof) {
    Encoder enc;
    enc.u8(uint8_t(Op::FakeProof)).u32(index).bytes(proof.serialize());
    return enc.take();
}

Bytes encode_instruction_call(const std::vector<uint64_t>& rewards, const zkp::Proof& proof) {
    Encoder enc;
    enc.u8(uint8_t(Op::Instruction)).u32(uint32_t(rewards.size()));
    for (uint64_t r : rewards) enc.u64(r);
    enc.bytes(proof.serialize());
    return enc.take();
}

Bytes encode_selection_call(const std::vector<zkp::SelectionEntry>& selection,
                            const zkp::Proof& proof) {
    Encoder enc;
    enc.u8(uint8_t(Op::Instruction)).u32(uint32_t(selection.size()));
    for (const zkp::SelectionEntry& e : selection) enc.u32(e.bidder_index).u64(e.payment);
    enc.bytes(proof.serialize());
    return enc.take();
}

Bytes encode_answer_call(ByteView ciphertext) {
    Encoder enc;
    enc.u8(uint8_t(Op::Answer)).bytes(ciphertext);
    return enc.take();
}

}  // namespace anoncrowd::contracts
