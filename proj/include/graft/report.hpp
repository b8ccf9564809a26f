#pragma once

#include <optional>
#include <string>
#include <vector>

namespace graft {

/// Location + the two unequal values of a violated equation. Every FAIL
/// carries one; PASS never does.
struct Witness {
    std::string location;
    std::string lhs;
    std::string rhs;
};

enum class Outcome { Pass, Fail, NotApplicable };

struct CheckResult {
    Outcome outcome = Outcome::Pass;
    std::optional<Witness> witness;
    std::string note; // free-form detail (e.g. the hom-map of a closed ring)

    static CheckResult pass(std::string note = {}) { return {Outcome::Pass, std::nullopt, std::move(note)}; }
    static CheckResult fail(Witness w) { return {Outcome::Fail, std::move(w), {}}; }
    static CheckResult not_applicable(std::string note = {}) {
        return {Outcome::NotApplicable, std::nullopt, std::move(note)};
    }
    bool passed() const { return outcome == Outcome::Pass; }
    bool failed() const { return outcome == Outcome::Fail; }
};

enum class Verdict { Pass, Fail, NotApplicable, Error };

std::string to_string(Verdict v);

/// One line of a verification run.
struct CheckReport {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::optional<Witness> witness;
    std::string note;
    double ms = 0.0;
};

} // namespace graft
