#include "precond/catalog.hpp"

#include "precond/error.hpp"

namespace precond {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_catalog();
}

namespace {

template <class Entry, class Parse>
std::vector<Entry> load(std::string_view kind, Parse parse) {
  std::vector<Entry> out;
  for (const auto& [stem, text] : catalog_sources()) {
    if (document_kind(text) != kind) continue;
    try {
      out.push_back(Entry{std::string(stem), parse(text)});
    } catch (const Error& e) {
      throw Error(e.code(), "catalog file " + std::string(stem) + ": " + e.what());
    }
  }
  return out;
}

template <class Entry>
const Entry& find(const std::vector<Entry>& entries, std::string_view name) {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw Error(ErrorCode::InvalidSpec, "no catalog entry named " + std::string(name));
}

}  // namespace

const std::vector<std::pair<std::string_view, std::string_view>>& catalog_sources() {
  return detail::embedded_catalog();
}

const std::vector<WitnessEntry>& catalog_entries() {
  static const auto entries =
      load<WitnessEntry>("lattice", [](std::string_view t) { return parse_lattice_document(t); });
  return entries;
}

const std::vector<FrameEntry>& catalog_frames() {
  static const auto entries = load<FrameEntry>("frame", parse_frame_document);
  return entries;
}

const std::vector<SelectionEntry>& catalog_selection_frames() {
  static const auto entries = load<SelectionEntry>("selframe", parse_selection_document);
  return entries;
}

const WitnessEntry& catalog_entry(std::string_view name) { return find(catalog_entries(), name); }
const FrameEntry& catalog_frame(std::string_view name) { return find(catalog_frames(), name); }
const SelectionEntry& catalog_selection_frame(std::string_view name) {
  return find(catalog_selection_frames(), name);
}

}  // namespace precond
