#pragma once

// Deterministic serialization of atlases and reports, plus golden-file
// comparison.  Output is byte-stable: fixed key order, fixed cell ordering,
// floating point numbers printed at 12 significant digits.

#include <string>
#include <vector>

#include "tnncells/flag.hpp"
#include "tnncells/parabolic.hpp"
#include "tnncells/springer.hpp"

namespace tnncells {

// One discrepancy between a computed atlas and a stored golden file.
struct GoldenIssue {
  std::string kind;  // "missing", "extra", "invalid", "duplicate"
  std::vector<int> v_word, w_word;
  bool suspect = false;   // the golden entry was flagged as a transcription suspect
  std::string note;       // annotation carried by the golden entry
};

struct GoldenDiff {
  bool golden_complete = true;
  std::vector<GoldenIssue> issues;
  // A regression is any discrepancy not explained by a flagged transcription
  // suspect: a non-suspect golden entry we fail to produce, an invalid
  // non-suspect entry, or (for complete goldens) a computed cell the golden
  // lacks.
  bool regression() const;
};

// golden_text is the JSON text of a stored golden file; the piece and context
// must match the computed atlas (validation_error otherwise).
GoldenDiff diff_springer_golden(const CellAtlas& atlas, const WeylGroup& g,
                                const std::string& golden_text);

std::string springer_atlas_json(const WeylGroup& g, const CellAtlas& atlas,
                                const GoldenDiff* diff = nullptr);
std::string springer_atlas_table(const WeylGroup& g, const CellAtlas& atlas);
// The canonical golden-file form of a computed atlas (complete, no suspects).
std::string springer_golden_json(const WeylGroup& g, const CellAtlas& atlas);

std::string flag_atlas_json(const WeylGroup& g, const FlagAtlas& atlas);
std::string flag_atlas_table(const WeylGroup& g, const FlagAtlas& atlas);

struct ParabolicReport {
  int n = 0;
  std::vector<std::vector<std::string>> matrix;  // exact entries as strings
  MinorClass minor_class;
  ParabolicData data;
  bool has_borel_chart = false;
  BorelChartReport borel;
};
std::string parabolic_report_json(const ParabolicReport& report);

// %.12g, the pinned float format used everywhere in serialized output.
std::string format_double(double x);

}  // namespace tnncells
