#include "cliquelink/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace cliquelink {

namespace {

struct Line {
  int number;
  std::vector<std::string> words;
};

std::vector<Line> split_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::stringstream pieces(raw);
    std::string piece;
    while (std::getline(pieces, piece, ';')) {
      std::istringstream ws(piece);
      Line line{number, {}};
      for (std::string w; ws >> w;) line.words.push_back(w);
      if (!line.words.empty()) out.push_back(std::move(line));
    }
  }
  return out;
}

[[noreturn]] void bad(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

int to_int(const Line& line, const std::string& word) {
  int v = 0;
  auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc{} || end != word.data() + word.size()) bad(line.number, "not an integer: " + word);
  return v;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

}  // namespace

LinkageProblem parse_instance(std::istream& in) {
  std::optional<ProductGraph> g;
  std::vector<TerminalPair> pairs;
  bool seen_version = false;
  for (const Line& line : split_lines(in)) {
    const std::string& key = line.words[0];
    if (key == "version") {
      if (seen_version || g) bad(line.number, "version must come first, once");
      if (line.words.size() != 2) bad(line.number, "expected: version N");
      if (to_int(line, line.words[1]) != instance_format_version)
        bad(line.number, "unsupported format version " + line.words[1]);
      seen_version = true;
    } else if (key == "dims") {
      if (g) bad(line.number, "dims given twice");
      if (line.words.size() != 3) bad(line.number, "expected: dims d1 d2");
      const int d1 = to_int(line, line.words[1]);
      const int d2 = to_int(line, line.words[2]);
      if (d1 < 0 || d2 < 0) bad(line.number, "dimensions must be non-negative");
      g.emplace(d1, d2);
    } else if (key == "pair") {
      if (!g) bad(line.number, "pair before dims");
      if (line.words.size() != 5) bad(line.number, "expected: pair r c r c");
      Vertex s{to_int(line, line.words[1]), to_int(line, line.words[2])};
      Vertex t{to_int(line, line.words[3]), to_int(line, line.words[4])};
      for (Vertex v : {s, t})
        if (!g->contains(v))
          bad(line.number, "vertex " + to_string(v) + " outside a " + std::to_string(g->row_count()) + "x" +
                               std::to_string(g->col_count()) + " grid");
      pairs.push_back({s, t});
    } else {
      bad(line.number, "unknown keyword " + key);
    }
  }
  if (!g) throw InputError("missing dims line");
  LinkageProblem p{Subgrid(*g), std::move(pairs)};
  try {
    check_terminals(p);
  } catch (const ContractError& e) {
    throw InputError(e.what());
  }
  return p;
}

LinkageProblem parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

LinkageProblem read_instance(const std::string& path) {
  std::ifstream in = open(path);
  return parse_instance(in);
}

std::string serialize_instance(const LinkageProblem& p) {
  const ProductGraph& g = p.grid.base();
  std::ostringstream os;
  os << "version " << instance_format_version << '\n' << "dims " << g.d1() << ' ' << g.d2() << '\n';
  for (const TerminalPair& q : p.pairs)
    os << "pair " << q.s.row << ' ' << q.s.col << ' ' << q.t.row << ' ' << q.t.col << '\n';
  return os.str();
}

std::string format_linkage(const Linkage& l) {
  std::ostringstream os;
  for (std::size_t i = 0; i < l.paths.size(); ++i) os << "path " << i + 1 << ": " << to_string(l.paths[i]) << '\n';
  return os.str();
}

Linkage parse_linkage(std::istream& in) {
  std::map<int, Path> paths;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t pos = raw.find_first_not_of(" \t\r");
    if (pos == std::string::npos || raw[pos] == '#') continue;
    if (raw.compare(pos, 4, "path") != 0) bad(number, "expected a path line");
    const std::size_t colon = raw.find(':', pos);
    if (colon == std::string::npos) bad(number, "missing ':'");
    const Line head{number, {}};
    std::string index_word = raw.substr(pos + 4, colon - pos - 4);
    index_word.erase(0, index_word.find_first_not_of(" \t"));
    index_word.erase(index_word.find_last_not_of(" \t") + 1);
    const int index = to_int(head, index_word);
    Path path;
    std::istringstream vs(raw.substr(colon + 1));
    for (std::string tok; vs >> tok;) {
      const std::size_t comma = tok.find(',');
      if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')' || comma == std::string::npos)
        bad(number, "bad vertex " + tok);
      path.push_back({to_int(head, tok.substr(1, comma - 1)), to_int(head, tok.substr(comma + 1, tok.size() - comma - 2))});
    }
    if (!paths.emplace(index, std::move(path)).second) bad(number, "path " + std::to_string(index) + " given twice");
  }
  Linkage l;
  int expect = 1;
  for (auto& [index, path] : paths) {
    if (index != expect++) throw InputError("path indices must run 1.." + std::to_string(paths.size()));
    l.paths.push_back(std::move(path));
  }
  return l;
}

Linkage parse_linkage(const std::string& text) {
  std::istringstream in(text);
  return parse_linkage(in);
}

Linkage read_linkage(const std::string& path) {
  std::ifstream in = open(path);
  return parse_linkage(in);
}

}  // namespace cliquelink
