#pragma once

#include <string>
#include <vector>

namespace hopfrep {

/// Outcome of one verified diagram or law. `diagram` carries the report
/// numbering used throughout the tool: (1)-(2) action laws, (3)-(4) coaction
/// laws, (5) module homomorphism, (6) comodule homomorphism, (9) module /
/// comodule compatibility, (12) counit square, (13) coproduct square.
struct ReportItem {
    std::string id;        // dotted check path, e.g. "module.assoc"
    std::string diagram;   // "(2)" or "-" when no diagram applies
    bool pass = false;
    std::string witness;   // rendered basis tuple, empty on pass
    std::string lhs;       // rendered left path value at the witness
    std::string rhs;       // rendered right path value at the witness
    std::string note;      // free-form, e.g. "side=right" or counts
};

/// A check verdict: a list of items plus the request that produced it.
struct Report {
    std::string check;
    std::string instance;
    int degree = -1;
    std::vector<ReportItem> items;

    bool passed() const;

    /// Find an item by id; nullptr when absent.
    const ReportItem* find(const std::string& id) const;

    /// Append another report's items under `prefix` + ".".
    void absorb(const Report& other, const std::string& prefix);

    void add_pass(const std::string& id, const std::string& diagram, const std::string& note = "");
    void add_fail(const std::string& id, const std::string& diagram, const std::string& witness,
                  const std::string& lhs, const std::string& rhs, const std::string& note = "");

    /// Deterministic human-readable rendering, one line per item.
    std::string to_text() const;
    /// Deterministic line-delimited JSON, one object per item plus a summary
    /// line, with stable field order.
    std::string to_json_lines() const;
};

}  // namespace hopfrep
