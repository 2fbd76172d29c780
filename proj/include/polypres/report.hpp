#pragma once

#include <string>
#include <vector>

namespace polypres {

// Uniform result carrier for the exhaustive verifiers. A failed check is a
// report entry with a witness, not an exception.
struct Report {
  struct Item {
    std::string check;
    bool pass = false;
    std::string witness; // empty when pass
  };

  std::vector<Item> items;

  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  void add(std::string check, bool ok, std::string witness = "") {
    items.push_back({std::move(check), ok, std::move(witness)});
  }

  // first failing item, rendered "check: witness"
  std::string first_failure() const {
    for (const auto& it : items)
      if (!it.pass) return it.check + ": " + it.witness;
    return "";
  }

  bool failed(const std::string& check) const {
    for (const auto& it : items)
      if (!it.pass && it.check == check) return true;
    return false;
  }
};

} // namespace polypres
