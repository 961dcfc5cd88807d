#include "oddcolor/coloring_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace oddcolor {
namespace {

std::uint64_t parse_uint(const std::string& tok, int line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected unsigned integer, got '" + tok + "'");
  return value;
}

std::uint64_t parse_kv(const std::string& tok, const std::string& key,
                       int line) {
  if (tok.rfind(key + "=", 0) != 0)
    throw ParseError(line, "expected " + key + "=<value>");
  return parse_uint(tok.substr(key.size() + 1), line);
}

}  // namespace

void write_coloring(const EdgeColoring& coloring, std::ostream& out,
                    const std::vector<std::string>& trailing_comments) {
  coloring.validate_dense();
  const HostGraph& host = coloring.host();
  out << "oddcolor v1\n";
  out << "graph " << host.describe() << "\n";
  out << "colors t=" << coloring.color_count() << "\n";
  const std::uint64_t m = host.edge_count();
  for (std::uint64_t i = 0; i < m; ++i) {
    const ColorId c = coloring.raw_at(i);
    if (c == kUncolored) continue;
    const Edge e = host.edge_at(i);
    out << "e " << e.u << ' ' << e.v << ' ' << c << "\n";
  }
  for (const std::string& comment : trailing_comments)
    out << "# " << comment << "\n";
}

void write_coloring_file(const EdgeColoring& coloring,
                         const std::filesystem::path& path,
                         const std::vector<std::string>& trailing_comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  write_coloring(coloring, out, trailing_comments);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

EdgeColoring read_coloring(std::istream& in) {
  std::string line;
  int lineno = 0;

  auto next_line = [&](bool required) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line[0] == '#') continue;
      return true;
    }
    if (required) throw ParseError(lineno + 1, "unexpected end of file");
    return false;
  };

  next_line(true);
  if (line != "oddcolor v1") throw ParseError(lineno, "malformed header");

  next_line(true);
  std::istringstream hdr(line);
  std::string word, kindword, nspec;
  hdr >> word >> kindword >> nspec;
  if (word != "graph" || (kindword != "complete" && kindword != "bipartite"))
    throw ParseError(lineno, "malformed graph line");
  const std::uint64_t n = parse_kv(nspec, "n", lineno);
  if (n == 0 || n > (1u << 25))
    throw ParseError(lineno, "vertex count out of range");
  const HostGraph host = kindword == "complete"
                             ? HostGraph::complete(static_cast<std::uint32_t>(n))
                             : HostGraph::bipartite(static_cast<std::uint32_t>(n));

  next_line(true);
  std::istringstream chdr(line);
  std::string cword, tspec;
  chdr >> cword >> tspec;
  if (cword != "colors") throw ParseError(lineno, "malformed colors line");
  const std::uint64_t t = parse_kv(tspec, "t", lineno);

  EdgeColoring coloring(host);
  std::vector<bool> edge_seen(host.edge_count(), false);
  while (next_line(false)) {
    if (line.empty()) throw ParseError(lineno, "empty line");
    std::istringstream rec(line);
    std::string tag, us, vs, cs, extra;
    rec >> tag >> us >> vs >> cs;
    if (tag != "e" || cs.empty())
      throw ParseError(lineno, "malformed edge record");
    if (rec >> extra) throw ParseError(lineno, "trailing tokens");
    const std::uint64_t u = parse_uint(us, lineno);
    const std::uint64_t v = parse_uint(vs, lineno);
    const std::uint64_t c = parse_uint(cs, lineno);
    if (u == v) throw ParseError(lineno, "loop edge");
    if (u >= host.vertex_count() || v >= host.vertex_count())
      throw ParseError(lineno, "vertex out of range");
    Edge e;
    try {
      e = host.edge(static_cast<std::uint32_t>(u),
                    static_cast<std::uint32_t>(v));
    } catch (const std::invalid_argument& ex) {
      throw ParseError(lineno, ex.what());
    }
    const std::uint64_t idx = host.edge_index(e);
    if (edge_seen[idx]) throw ParseError(lineno, "duplicate edge");
    edge_seen[idx] = true;
    if (c >= t) throw ParseError(lineno, "color id out of range");
    coloring.set(e, static_cast<ColorId>(c));
  }

  if (static_cast<std::uint64_t>(coloring.color_count()) != t)
    throw ParseError(lineno, "declared color count does not match records");
  coloring.validate_dense();
  return coloring;
}

EdgeColoring read_coloring_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_coloring(in);
}

}  // namespace oddcolor
