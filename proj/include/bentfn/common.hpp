#pragma once

#include <stdexcept>
#include <string>

namespace bentfn {

// Thrown on contract violations (reducible polynomial, bad subfield, guard
// overruns, ...). The message is the short error tag used throughout.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Outcome of a theorem verifier. Vacuous means the hypotheses failed and no
// claim was tested; it is counted separately from Pass in scan statistics.
enum class Verdict { Pass, Fail, Vacuous };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        default: return "VACUOUS";
    }
}

} // namespace bentfn
