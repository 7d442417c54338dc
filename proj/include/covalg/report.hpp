// Machine-readable verification reports emitted by the command-line tools.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace covalg {

struct Verdict {
    std::string name;     // stable identifier of the property certified
    bool pass = false;
    std::string witness;  // human-readable detail / counterexample, may be empty
};

struct Report {
    std::string command;
    std::string inputs_digest;  // fnv1a-64 hex of the raw input bytes
    std::vector<Verdict> verdicts;
    double seconds = 0.0;

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }
};

std::string fnv1a_hex(const std::string& bytes);

}  // namespace covalg
