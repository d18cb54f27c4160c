#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homcat {

/// A single failed identity instance: which identity, on which inputs, and
/// the two sides that should have agreed.
struct CheckFailure {
    std::string identity;
    std::string witness;
    std::string lhs;
    std::string rhs;
};

/// Result of an axiom suite. Failures are recorded in the deterministic
/// order the checker enumerates its inputs, so counterexamples are
/// reproducible and diffable. Notes carry informational observations that
/// do not affect the verdict.
struct CheckReport {
    std::string suite;
    bool passed = true;
    std::vector<CheckFailure> failures;
    std::vector<std::string> notes;

    void fail(std::string identity, std::string witness, std::string lhs, std::string rhs) {
        passed = false;
        failures.push_back({std::move(identity), std::move(witness), std::move(lhs), std::move(rhs)});
    }

    void note(std::string text) { notes.push_back(std::move(text)); }

    void merge(const CheckReport& other) {
        passed = passed && other.passed;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }

    std::string summary() const {
        if (passed) return suite + ": pass";
        std::string s = suite + ": FAIL (" + std::to_string(failures.size()) + " witness(es))";
        for (const auto& f : failures)
            s += "\n  " + f.identity + " at " + f.witness + ": lhs = " + f.lhs + ", rhs = " + f.rhs;
        return s;
    }
};

/// Thrown by constructors whose mathematical preconditions fail; carries the
/// witness report so callers can surface the counterexample.
struct PreconditionError : std::runtime_error {
    CheckReport report;
    explicit PreconditionError(const CheckReport& r)
        : std::runtime_error(r.summary()), report(r) {}
};

}  // namespace homcat
