#include <algorithm>
#include <sstream>

#include "cli.hpp"

namespace singcoh::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_scalar(const Json& v) { return !v.is_array() && !v.is_object(); }

struct Section {
  std::string title;
  std::vector<std::vector<std::string>> rows;  // first row is the header when present
  bool header = false;
};

void align(std::ostream& os, const std::vector<std::vector<std::string>>& rows, const std::string& indent) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  for (const auto& row : rows) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << '\n';
  }
}

void collect(const Json& j, const std::string& prefix, std::vector<std::vector<std::string>>& scalars,
             std::vector<Section>& sections) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix + key;
    if (is_scalar(value)) {
      scalars.push_back({name, cell_text(value)});
    } else if (value.is_object()) {
      if (value.empty()) scalars.push_back({name, "{}"});
      else collect(value, name + ".", scalars, sections);
    } else if (value.empty()) {
      scalars.push_back({name, "[]"});
    } else if (std::all_of(value.begin(), value.end(), is_scalar)) {
      std::string joined;
      for (const auto& v : value) joined += (joined.empty() ? "" : ", ") + cell_text(v);
      scalars.push_back({name, joined});
    } else if (std::all_of(value.begin(), value.end(), [](const Json& v) { return v.is_object(); })) {
      Section s{name, {}, true};
      std::vector<std::string> header;
      for (const auto& row : value)
        for (const auto& [k, _] : row.items())
          if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
      s.rows.push_back(header);
      for (const auto& row : value) {
        std::vector<std::string> cells;
        for (const auto& k : header) cells.push_back(row.contains(k) ? cell_text(row.at(k)) : "");
        s.rows.push_back(std::move(cells));
      }
      sections.push_back(std::move(s));
    } else {
      Section s{name, {}, false};
      for (const auto& row : value) {
        std::vector<std::string> cells;
        if (row.is_array())
          for (const auto& c : row) cells.push_back(cell_text(c));
        else
          cells.push_back(cell_text(row));
        s.rows.push_back(std::move(cells));
      }
      sections.push_back(std::move(s));
    }
  }
}

}  // namespace

std::string render_pretty(const Json& j) {
  std::ostringstream os;
  if (!j.is_object()) {
    os << j.dump(2) << '\n';
    return os.str();
  }
  std::vector<std::vector<std::string>> scalars;
  std::vector<Section> sections;
  collect(j, "", scalars, sections);
  align(os, scalars, "");
  for (const auto& s : sections) {
    os << '\n' << s.title << ":\n";
    align(os, s.rows, "  ");
  }
  return os.str();
}

}  // namespace singcoh::cli
