#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mocklie/rational.hpp"

namespace mocklie {

// Outcome of a single named check. On failure, witness holds the basis
// indices of the first failing tuple in scan order and defect the exact
// nonzero discrepancy (a vector, or a single entry for scalar checks).
struct CheckEntry {
  std::string check;
  bool pass = true;
  std::vector<int> witness;
  Vec defect;
  std::string note;
};

struct CheckReport {
  std::vector<CheckEntry> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }

  const CheckEntry* find(std::string_view check) const {
    for (const auto& e : entries)
      if (e.check == check) return &e;
    return nullptr;
  }

  bool passed(std::string_view check) const {
    const CheckEntry* e = find(check);
    return e && e->pass;
  }

  void add(CheckEntry e) { entries.push_back(std::move(e)); }

  void add_pass(std::string check, std::string note = "") {
    entries.push_back({std::move(check), true, {}, {}, std::move(note)});
  }

  void add_fail(std::string check, std::vector<int> witness, Vec defect,
                std::string note = "") {
    entries.push_back(
        {std::move(check), false, std::move(witness), std::move(defect), std::move(note)});
  }

  void merge(const CheckReport& other, const std::string& prefix = "") {
    for (CheckEntry e : other.entries) {
      e.check = prefix + e.check;
      entries.push_back(std::move(e));
    }
  }
};

// One line per entry: "  <check>: pass" or
// "  <check>: FAIL at (i,j,...) defect (...) <note>".
std::string render_report(const CheckReport& report);

}  // namespace mocklie
