#include "linassign/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace linassign {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

// Locale-independent integer list; first token already consumed.
std::vector<Coord> parse_coords(std::string_view line, std::size_t line_no, std::size_t offset) {
  std::vector<Coord> coords;
  std::size_t pos = offset;
  while (pos < line.size()) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !is_space(line[end])) ++end;
    Coord value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc() || ptr != line.data() + end) {
      throw Error(Errc::kSyntaxError, "line " + std::to_string(line_no) + ": '" +
                                          std::string(line.substr(pos, end - pos)) +
                                          "' is not an integer");
    }
    coords.push_back(value);
    pos = end;
  }
  return coords;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<Coord> s, t;
  bool have_s = false, have_t = false;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    std::size_t pos = 0;
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos == line.size() || line[pos] == '#') continue;
    const char tag = line[pos];
    if ((tag != 'S' && tag != 'T') ||
        (pos + 1 < line.size() && !is_space(line[pos + 1]))) {
      throw Error(Errc::kSyntaxError,
                  "line " + std::to_string(line_no) + ": expected an 'S' or 'T' line");
    }
    if (tag == 'S') {
      if (have_s) {
        throw Error(Errc::kSyntaxError, "line " + std::to_string(line_no) + ": duplicate S line");
      }
      s = parse_coords(line, line_no, pos + 1);
      have_s = true;
    } else {
      if (have_t) {
        throw Error(Errc::kSyntaxError, "line " + std::to_string(line_no) + ": duplicate T line");
      }
      t = parse_coords(line, line_no, pos + 1);
      have_t = true;
    }
  }
  if (!have_s) throw Error(Errc::kSyntaxError, "missing S line");
  if (!have_t) throw Error(Errc::kSyntaxError, "missing T line");
  return Instance::make(std::move(s), std::move(t));
}

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  out << 'S';
  for (Coord c : inst.s()) out << ' ' << c;
  out << "\nT";
  for (Coord c : inst.t()) out << ' ' << c;
  out << '\n';
  return out.str();
}

std::vector<Coord> parse_box_notation(std::string_view pattern) {
  std::vector<Coord> onsets;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const char c = pattern[i];
    if (c == 'x' || c == 'X') {
      onsets.push_back(static_cast<Coord>(i));
    } else if (c != '.') {
      throw Error(Errc::kBadSymbol, "bad symbol '" + std::string(1, c) + "' at position " +
                                        std::to_string(i) + "; expected 'x' or '.'");
    }
  }
  return onsets;
}

Cost rhythm_distance(std::string_view a, std::string_view b) {
  Instance inst = Instance::make(parse_box_notation(a), parse_box_notation(b));
  return solve(inst).total_cost;
}

std::string solution_to_json(const Instance& inst, const Solution& sol) {
  nlohmann::ordered_json out;
  out["cost"] = sol.total_cost;
  auto edges = nlohmann::ordered_json::array();
  std::vector<Edge> sorted_edges = sol.assignment.edges;
  std::stable_sort(sorted_edges.begin(), sorted_edges.end(),
                   [&](const Edge& a, const Edge& b) { return inst.s(a.s_index) < inst.s(b.s_index); });
  for (const Edge& e : sorted_edges) {
    edges.push_back({inst.s(e.s_index), inst.t(e.t_index)});
  }
  out["edges"] = std::move(edges);
  auto removed = nlohmann::ordered_json::array();
  for (const auto& [s_index, height] : sol.removed) removed.push_back(inst.s(s_index));
  out["removed"] = std::move(removed);
  out["decomposition"] = {{"neighbor_sum", sol.neighbor_sum}, {"reduced_area", sol.reduced_area}};
  return out.dump();
}

std::string solution_to_tsv(const Instance& inst, const Solution& sol) {
  std::ostringstream out;
  out << "cost\t" << sol.total_cost << '\n';
  out << "neighbor_sum\t" << sol.neighbor_sum << '\n';
  out << "reduced_area\t" << sol.reduced_area << '\n';
  out << "removed";
  for (const auto& [s_index, height] : sol.removed) out << '\t' << inst.s(s_index);
  out << '\n';
  std::vector<Edge> sorted_edges = sol.assignment.edges;
  std::stable_sort(sorted_edges.begin(), sorted_edges.end(),
                   [&](const Edge& a, const Edge& b) { return inst.s(a.s_index) < inst.s(b.s_index); });
  for (const Edge& e : sorted_edges) {
    out << "edge\t" << inst.s(e.s_index) << '\t' << inst.t(e.t_index) << '\n';
  }
  return out.str();
}

}  // namespace linassign
