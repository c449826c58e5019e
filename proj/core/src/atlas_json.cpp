#include "tnncells/atlas_json.hpp"

#include "json.hpp"

#include <cinttypes>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "tnncells/version.hpp"

namespace tnncells {

namespace {

std::string esc(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string word_json(const std::vector<int>& word) {
  std::string out = "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(word[i]);
  }
  return out + "]";
}

std::string word_json(const WeylElement& e) { return word_json(e.word()); }

std::string word_text(const std::vector<int>& word) {
  std::string out = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(word[i]);
  }
  return out + ")";
}

std::string index_set_json(const IndexSet& s) { return word_json(s.to_vector()); }

std::string histogram_json(const std::map<int, std::size_t>& h) {
  std::string out = "{";
  bool first = true;
  for (const auto& [dim, count] : h) {
    if (!first) out += ",";
    first = false;
    out += "\"" + std::to_string(dim) + "\":" + std::to_string(count);
  }
  return out + "}";
}

std::string header_json(const char* kind, const WeylGroup& g) {
  std::string out = "{\n";
  out += "  \"schema_version\": 1,\n";
  out += std::string("  \"tool_version\": \"") + kVersion + "\",\n";
  out += std::string("  \"kind\": \"") + kind + "\",\n";
  out += std::string("  \"type\": \"") + char(g.type()) + "\",\n";
  out += "  \"rank\": " + std::to_string(g.rank()) + ",\n";
  return out;
}

std::string golden_diff_json(const GoldenDiff& diff) {
  std::string out = "{\"complete\": ";
  out += diff.golden_complete ? "true" : "false";
  out += ", \"regression\": ";
  out += diff.regression() ? "true" : "false";
  out += ", \"issues\": [";
  for (std::size_t i = 0; i < diff.issues.size(); ++i) {
    const GoldenIssue& is = diff.issues[i];
    if (i) out += ",";
    out += "\n    {\"kind\": \"" + esc(is.kind) + "\", \"v\": " + word_json(is.v_word) +
           ", \"w\": " + word_json(is.w_word) +
           ", \"suspect\": " + (is.suspect ? "true" : "false") + ", \"note\": \"" +
           esc(is.note) + "\"}";
  }
  if (!diff.issues.empty()) out += "\n  ";
  return out + "]}";
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string springer_atlas_json(const WeylGroup& g, const CellAtlas& atlas,
                                const GoldenDiff* diff) {
  std::string out = header_json("springer_atlas", g);
  out += "  \"z\": " + word_json(atlas.piece.z) + ",\n";
  out += "  \"zprime\": " + word_json(atlas.piece.z_prime) + ",\n";
  out += "  \"cells\": [";
  for (std::size_t i = 0; i < atlas.cells.size(); ++i) {
    const CellLabel& c = atlas.cells[i];
    if (i) out += ",";
    out += "\n    {\"v\": " + word_json(c.v) + ", \"w\": " + word_json(c.w) +
           ", \"dim\": " + std::to_string(c.dim) + "}";
  }
  if (!atlas.cells.empty()) out += "\n  ";
  out += "],\n";
  out += "  \"dim_histogram\": " + histogram_json(atlas.dim_histogram);
  if (diff) {
    out += ",\n  \"golden_diff\": " + golden_diff_json(*diff);
  }
  out += "\n}\n";
  return out;
}

std::string springer_atlas_table(const WeylGroup& g, const CellAtlas& atlas) {
  std::ostringstream out;
  out << diagram_name(g.type(), g.rank()) << " piece z=" << word_text(atlas.piece.z.word())
      << " zprime=" << word_text(atlas.piece.z_prime.word()) << "\n";
  out << "dim  v                w\n";
  for (const CellLabel& c : atlas.cells) {
    std::string v = word_text(c.v.word()), w = word_text(c.w.word());
    out << "  " << c.dim << "  " << v;
    for (std::size_t i = v.size(); i < 17; ++i) out << ' ';
    out << w << "\n";
  }
  out << "total " << atlas.cells.size() << " cells; histogram";
  for (const auto& [dim, count] : atlas.dim_histogram) out << " " << dim << ":" << count;
  out << "\n";
  return out.str();
}

std::string springer_golden_json(const WeylGroup& g, const CellAtlas& atlas) {
  std::string out = header_json("springer_atlas_golden", g);
  out += "  \"z\": " + word_json(atlas.piece.z) + ",\n";
  out += "  \"zprime\": " + word_json(atlas.piece.z_prime) + ",\n";
  out += "  \"complete\": true,\n";
  out += "  \"cells\": [";
  for (std::size_t i = 0; i < atlas.cells.size(); ++i) {
    if (i) out += ",";
    out += "\n    {\"v\": " + word_json(atlas.cells[i].v) +
           ", \"w\": " + word_json(atlas.cells[i].w) + "}";
  }
  if (!atlas.cells.empty()) out += "\n  ";
  out += "]\n}\n";
  return out;
}

bool GoldenDiff::regression() const {
  for (const GoldenIssue& is : issues) {
    if (is.kind == "extra") {
      if (golden_complete) return true;
    } else if (!is.suspect) {
      return true;
    }
  }
  return false;
}

GoldenDiff diff_springer_golden(const CellAtlas& atlas, const WeylGroup& g,
                                const std::string& golden_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(golden_text);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("golden file is not valid JSON: ") + e.what());
  }
  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!doc.contains(key))
      throw validation_error(std::string("golden file lacks key: ") + key);
    return doc.at(key);
  };
  try {
    if (require("kind").get<std::string>() != "springer_atlas_golden")
      throw validation_error("golden file has the wrong kind");
    if (require("type").get<std::string>() != std::string(1, char(g.type())) ||
        require("rank").get<int>() != g.rank())
      throw validation_error("golden file context does not match");
    if (require("z").get<std::vector<int>>() != atlas.piece.z.word() ||
        require("zprime").get<std::vector<int>>() != atlas.piece.z_prime.word())
      throw validation_error("golden file piece does not match");

    GoldenDiff diff;
    diff.golden_complete = require("complete").get<bool>();

    std::set<std::pair<std::vector<int>, std::vector<int>>> computed, seen_golden;
    for (const CellLabel& c : atlas.cells) computed.insert({c.v.word(), c.w.word()});

    for (const auto& entry : require("cells")) {
      GoldenIssue issue;
      issue.v_word = entry.at("v").get<std::vector<int>>();
      issue.w_word = entry.at("w").get<std::vector<int>>();
      issue.suspect = entry.value("suspect", false);
      issue.note = entry.value("note", std::string());
      std::pair<std::vector<int>, std::vector<int>> key;
      bool valid = true;
      try {
        WeylElement v = g.from_word(issue.v_word);
        WeylElement w = g.from_word(issue.w_word);
        // entries are identified with cells only when the printed words are
        // reduced as written
        if (int(issue.v_word.size()) != v.length() ||
            int(issue.w_word.size()) != w.length())
          valid = false;
        key = {v.word(), w.word()};
      } catch (const validation_error&) {
        valid = false;
      }
      if (!valid) {
        issue.kind = "invalid";
        diff.issues.push_back(std::move(issue));
        continue;
      }
      if (!seen_golden.insert(key).second) {
        issue.kind = "duplicate";
        diff.issues.push_back(std::move(issue));
        continue;
      }
      if (!computed.count(key)) {
        issue.kind = "missing";
        diff.issues.push_back(std::move(issue));
      }
    }
    for (const auto& key : computed)
      if (!seen_golden.count(key)) {
        GoldenIssue issue;
        issue.kind = "extra";
        issue.v_word = key.first;
        issue.w_word = key.second;
        diff.issues.push_back(std::move(issue));
      }
    return diff;
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("golden file is malformed: ") + e.what());
  }
}

std::string flag_atlas_json(const WeylGroup& g, const FlagAtlas& atlas) {
  std::string out = header_json("flag_atlas", g);
  out += "  \"H\": " + index_set_json(atlas.H) + ",\n";
  out += "  \"z\": " + word_json(atlas.piece.z) + ",\n";
  out += "  \"zprime\": " + word_json(atlas.piece.z_prime) + ",\n";
  out += "  \"cells\": [";
  for (std::size_t i = 0; i < atlas.cells.size(); ++i) {
    const FlagCellLabel& c = atlas.cells[i];
    if (i) out += ",";
    out += "\n    {\"rt\": {\"r\": " + word_json(c.r) + ", \"t\": " + word_json(c.t) +
           "}, \"rpt\": {\"rp\": " + word_json(c.r_prime) +
           ", \"tp\": " + word_json(c.t_prime) + "}, \"abc\": {\"a\": " + word_json(c.a) +
           ", \"b\": " + word_json(c.b) + ", \"c\": " + word_json(c.c) +
           "}, \"dim\": " + std::to_string(c.dim) + "}";
  }
  if (!atlas.cells.empty()) out += "\n  ";
  out += "],\n";
  out += "  \"dim_histogram\": " + histogram_json(atlas.dim_histogram);
  out += "\n}\n";
  return out;
}

std::string flag_atlas_table(const WeylGroup& g, const FlagAtlas& atlas) {
  std::ostringstream out;
  out << diagram_name(g.type(), g.rank()) << " H=" << word_text(atlas.H.to_vector())
      << " piece z=" << word_text(atlas.piece.z.word())
      << " zprime=" << word_text(atlas.piece.z_prime.word()) << "\n";
  out << "dim  r : t                r' : t'\n";
  for (const FlagCellLabel& c : atlas.cells) {
    std::string rt = word_text(c.r.word()) + " : " + word_text(c.t.word());
    out << "  " << c.dim << "  " << rt;
    for (std::size_t i = rt.size(); i < 21; ++i) out << ' ';
    out << word_text(c.r_prime.word()) << " : " << word_text(c.t_prime.word()) << "\n";
  }
  out << "total " << atlas.cells.size() << " cells; histogram";
  for (const auto& [dim, count] : atlas.dim_histogram) out << " " << dim << ":" << count;
  out << "\n";
  return out.str();
}

std::string parabolic_report_json(const ParabolicReport& report) {
  std::string out = "{\n";
  out += "  \"schema_version\": 1,\n";
  out += std::string("  \"tool_version\": \"") + kVersion + "\",\n";
  out += "  \"kind\": \"parabolic_report\",\n";
  out += "  \"n\": " + std::to_string(report.n) + ",\n";
  out += "  \"matrix\": [";
  for (std::size_t r = 0; r < report.matrix.size(); ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < report.matrix[r].size(); ++c) {
      if (c) out += ",";
      out += "\"" + esc(report.matrix[r][c]) + "\"";
    }
    out += "]";
  }
  out += "],\n";
  const char* mc = report.minor_class == MinorClass::totally_positive
                       ? "totally_positive"
                       : report.minor_class == MinorClass::totally_nonnegative
                             ? "totally_nonnegative"
                             : "neither";
  out += std::string("  \"minor_class\": \"") + mc + "\",\n";
  out += "  \"eigenvalues\": [";
  for (std::size_t i = 0; i < report.data.split.groups.size(); ++i) {
    if (i) out += ",";
    out += format_double(report.data.split.groups[i].value);
  }
  out += "],\n  \"blocks\": [";
  for (std::size_t i = 0; i < report.data.levi_block_sizes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(report.data.levi_block_sizes[i]);
  }
  out += "],\n";
  out += std::string("  \"is_full_group\": ") +
         (report.data.is_full_group ? "true" : "false") + ",\n";
  out += std::string("  \"is_borel\": ") + (report.data.is_borel ? "true" : "false") +
         ",\n";
  out += "  \"construction_agreement\": " +
         format_double(report.data.construction_agreement) + ",\n";
  out += "  \"levi_agreement\": " + format_double(report.data.levi_agreement) + ",\n";
  out += "  \"flag_pluecker_signs\": [";
  if (report.has_borel_chart) {
    for (std::size_t i = 0; i < report.borel.flag_pluecker_signs.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(report.borel.flag_pluecker_signs[i]);
    }
  }
  out += "],\n";
  out += std::string("  \"borel_chart_pass\": ") +
         (report.has_borel_chart && report.borel.pass ? "true" : "false");
  out += "\n}\n";
  return out;
}

}  // namespace tnncells
