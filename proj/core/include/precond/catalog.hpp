#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "precond/text_format.hpp"

namespace precond {

/// A lattice document from the built-in catalog, keyed by file stem.
struct WitnessEntry {
  std::string name;
  LatticeDocument doc;
};

struct FrameEntry {
  std::string name;
  FrameDocument doc;
};

struct SelectionEntry {
  std::string name;
  SelectionDocument doc;
};

/// Raw catalog files as (stem, text), sorted by stem.
const std::vector<std::pair<std::string_view, std::string_view>>& catalog_sources();

const std::vector<WitnessEntry>& catalog_entries();
const std::vector<FrameEntry>& catalog_frames();
const std::vector<SelectionEntry>& catalog_selection_frames();

/// Throws Error{InvalidSpec} if there is no such entry.
const WitnessEntry& catalog_entry(std::string_view name);
const FrameEntry& catalog_frame(std::string_view name);
const SelectionEntry& catalog_selection_frame(std::string_view name);

}  // namespace precond
