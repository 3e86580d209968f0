#ifndef ANONCROWD_LEDGER_TRACE_HPP_
#define ANONCROWD_LEDGER_TRACE_HPP_

#include <string>
#include <vector>

namespace anoncrowd::ledger {

// Append-only run trace. One tab-separated line per event:
//   height <TAB> sender <TAB> target <TAB> kind <TAB> status <TAB> value
// plus '#'-prefixed header lines. Deterministic runs produce byte-identical
// traces.
class TraceSink {
  public:
    void header(const std::string& line) { lines_.push_back("# " + line); }

    void event(uint64_t height, const std::string& sender, const std::string& target,
               const std::string& kind, const std::string& status, uint64_t value) {
        lines_.push_back(std::to_string(height) + "\t" + sender + "\t" + target + "\t" +
                         kind + "\t" + status + "\t" + std::to_string(value));
    }

    const std::vector<std::string>& lines() const { return lines_; }

    std::string str() const {
        std::string out;
        for (const std::string& l : lines_) {
            out += l;
            out += '\n';
        }
        return out;
    }

  private:
    std::vector<std::string> lines_;
};

}  // namespace anoncrowd::ledger

#endif
