#include <fstream>
#include <sstream>

#include "branchlaw/error.hpp"
#include "branchlaw/group.hpp"
#include "branchlaw/scalar_parser.hpp"
#include "branchlaw/text.hpp"

namespace branchlaw {

namespace {

GroupElement parse_generator(const std::string& line) {
  std::vector<std::string> cells;
  const auto rows = split(line, ';');
  if (rows.size() == 16) {
    cells = rows;
  } else if (rows.size() == 4) {
    for (const auto& row : rows) {
      const auto entries = split(row, ',');
      if (entries.size() != 4) throw ParseError("each matrix row needs 4 comma-separated entries");
      cells.insert(cells.end(), entries.begin(), entries.end());
    }
  } else {
    throw ParseError("a generator needs 4 ';'-separated rows (or 16 ';'-separated entries)");
  }
  GroupElement m;
  for (std::size_t i = 0; i < 16; ++i) m(i / 4, i % 4) = parse_scalar(trim(cells[i]));
  return m;
}

}  // namespace

GroupSource parse_group_text(std::string_view text, const std::string& source_name) {
  GroupSource out;
  out.name = source_name;
  bool have_hint = false;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    try {
      if (!have_hint) {
        out.order_hint = parse_size(line);
        have_hint = true;
        continue;
      }
      out.generators.push_back(parse_generator(line));
      out.generator_lines.push_back(line_no);
    } catch (const ParseError& e) {
      throw ParseError(source_name + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_hint) throw ParseError(source_name + ": missing order-hint line");
  if (out.generators.empty()) throw ParseError(source_name + ": no generators");
  return out;
}

GroupSource read_group_file(const std::string& path) {
  return parse_group_text(read_text_file(path), path);
}

GroupSource builtin_group(const std::string& name) {
  GroupSource out;
  out.name = name;
  if (name == "trivial") {
    out.order_hint = 1;
    out.generators.push_back(GroupElement::identity());
    return out;
  }
  if (name == "cyclic4") {
    const Cyclotomic i = Cyclotomic::root_of_unity(4);
    out.order_hint = 4;
    out.generators.push_back(GroupElement::diagonal(i, -i, i, -i));
    return out;
  }
  if (name == "typeII") {
    // Exceptional primitive group of order 60 (isomorphic to A5).
    return parse_group_text(
        "60\n"
        "1,0,0,0; 0,1,0,0; 0,0,E(3),0; 0,0,0,E(3)^2\n"
        "1,0,0,0; 0,-1/3,2/3,2/3; 0,2/3,-1/3,2/3; 0,2/3,2/3,-1/3\n"
        "-1/4,Sqrt(15)/4,0,0; Sqrt(15)/4,1/4,0,0; 0,0,0,1; 0,0,1,0\n",
        name);
  }
  throw ParseError("unknown built-in group '" + name + "'");
}

std::vector<std::string> builtin_group_names() { return {"trivial", "cyclic4", "typeII"}; }

}  // namespace branchlaw
