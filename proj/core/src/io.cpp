#include "polycirc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "polycirc/errors.hpp"

#ifndef POLYCIRC_VERSION_STRING
#define POLYCIRC_VERSION_STRING "0.0.0"
#endif

namespace polycirc {

std::string_view tool_version() { return POLYCIRC_VERSION_STRING; }

std::string format_cycles(const Permutation& a) {
  std::string out;
  for (const auto& cycle : cycle_decomposition(a).cycles) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t line,
                         std::size_t first_column) {
  if (degree == 0) throw ParseError("degree must be positive", line, first_column);
  std::vector<Point> img(degree);
  for (Point i = 0; i < degree; ++i) img[i] = i;
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto col = [&](std::size_t at) { return first_column + at; };
  auto skip_space = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  skip_space();
  if (i == text.size()) throw ParseError("expected a cycle", line, col(i));
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", line, col(i));
    ++i;
    skip_space();
    std::vector<Point> cycle;
    if (i < text.size() && text[i] == ')') {
      ++i;
    } else {
      while (true) {
        skip_space();
        std::size_t start = i;
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec == std::errc::result_out_of_range)
          throw ParseError("point out of range", line, col(start));
        if (ec != std::errc())
          throw ParseError("expected a point number", line, col(start));
        i = static_cast<std::size_t>(ptr - text.data());
        if (value < 1 || value > degree)
          throw ParseError("point " + std::to_string(value) + " out of range 1.." +
                               std::to_string(degree),
                           line, col(start));
        auto p = static_cast<Point>(value - 1);
        if (used[p])
          throw ParseError("duplicate point " + std::to_string(value) + " within a line", line,
                           col(start));
        used[p] = 1;
        cycle.push_back(p);
        skip_space();
        if (i == text.size()) throw ParseError("unterminated cycle", line, col(i));
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (text[i] != ',') throw ParseError("expected ',' or ')'", line, col(i));
        ++i;
      }
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return Permutation::unchecked(std::move(img));
}

PermGroup parse_generators(std::string_view text) {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t lead = 0;
    while (lead < line.size() && is_space(line[lead])) ++lead;
    while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
    if (lead >= line.size()) continue;
    if (degree == 0) {
      std::string_view h = line.substr(lead);
      if (h.size() < 2 || h[0] != 'n')
        throw ParseError("expected header 'n=<degree>'", line_no, lead + 1);
      std::size_t k = 1;
      while (k < h.size() && is_space(h[k])) ++k;
      if (k == h.size() || h[k] != '=')
        throw ParseError("expected '=' in header", line_no, lead + k + 1);
      ++k;
      while (k < h.size() && is_space(h[k])) ++k;
      std::uint64_t n = 0;
      auto [ptr, ec] = std::from_chars(h.data() + k, h.data() + h.size(), n);
      if (ec != std::errc() || ptr != h.data() + h.size() || n == 0 ||
          n > std::numeric_limits<Point>::max() / 2)
        throw ParseError("invalid degree in header", line_no, lead + k + 1);
      degree = static_cast<std::size_t>(n);
      continue;
    }
    gens.push_back(parse_cycles(line.substr(lead), degree, line_no, lead + 1));
  }
  if (degree == 0) throw ParseError("missing header 'n=<degree>'", line_no, 1);
  if (gens.empty()) return PermGroup::trivial(degree);
  return PermGroup(degree, std::move(gens));
}

std::string write_generators(const PermGroup& g) {
  std::string out = "n=" + std::to_string(g.degree()) + "\n";
  for (const auto& a : g.generators()) out += format_cycles(a) + "\n";
  return out;
}

namespace {

constexpr std::size_t kMaxGraphOrder = 1u << 20;

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
}

// Cursor over the printable bytes of a graph6/sparse6 string. Offsets in
// errors count from the start of the original input.
struct ByteReader {
  std::string_view data;
  std::size_t base = 0;
  std::size_t pos = 0;

  std::size_t offset() const { return base + pos; }
  bool done() const { return pos >= data.size(); }
  int next(const char* what) {
    if (done()) throw ParseError(std::string("truncated ") + what, 1, offset());
    auto c = static_cast<unsigned char>(data[pos]);
    if (c < 63 || c > 126) throw ParseError("byte out of range", 1, offset());
    ++pos;
    return c - 63;
  }
};

std::size_t read_size(ByteReader& r) {
  if (r.done()) throw ParseError("missing size header", 1, r.offset());
  int first = r.next("size header");
  if (first != 63) return static_cast<std::size_t>(first);
  std::size_t digits = 3;
  if (!r.done() && static_cast<unsigned char>(r.data[r.pos]) == 126) {
    ++r.pos;
    digits = 6;
  }
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | static_cast<std::uint64_t>(r.next("size header"));
  if (n > kMaxGraphOrder) throw ParseError("graph order " + std::to_string(n) + " too large", 1, r.offset());
  return static_cast<std::size_t>(n);
}

ByteReader strip(std::string_view bytes, std::string_view header) {
  std::size_t base = 0;
  if (bytes.substr(0, header.size()) == header) {
    bytes.remove_prefix(header.size());
    base = header.size();
  }
  if (!bytes.empty() && bytes.back() == '\n') bytes.remove_suffix(1);
  return ByteReader{bytes, base, 0};
}

}  // namespace

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_size(out, n);
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(acc + 63);
        acc = bits = 0;
      }
    }
  if (bits) out += static_cast<char>((acc << (6 - bits)) + 63);
  return out;
}

Graph read_graph6(std::string_view bytes) {
  ByteReader r = strip(bytes, ">>graph6<<");
  const std::size_t n = read_size(r);
  const std::uint64_t nbits = static_cast<std::uint64_t>(n) * (n - (n > 0)) / 2;
  const std::uint64_t nbytes = (nbits + 5) / 6;
  if (r.data.size() - r.pos < nbytes) {
    // Validate what is there so bad bytes win over truncation.
    while (!r.done()) r.next("graph6 payload");
    throw ParseError("truncated graph6 payload", 1, r.offset());
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uint64_t bit = 0;
  int cur = 0, left = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (left == 0) {
        cur = r.next("graph6 payload");
        left = 6;
      }
      --left;
      if ((cur >> left) & 1) edges.emplace_back(i, j);
    }
  if (left && (cur & ((1 << left) - 1)))
    throw ParseError("nonzero padding bits", 1, r.offset() - 1);
  if (!r.done()) throw ParseError("trailing data after graph6 payload", 1, r.offset());
  return Graph::from_edges(n, edges);
}

std::string write_sparse6(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t k = 1;
  while ((std::size_t{1} << k) < n) ++k;
  std::vector<int> bits;
  auto enc = [&](std::size_t x) {
    for (std::size_t i = 0; i < k; ++i) bits.push_back(static_cast<int>((x >> (k - i - 1)) & 1));
  };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(v, u);
  std::sort(edges.begin(), edges.end());
  std::size_t curv = 0;
  for (auto [v, u] : edges) {
    if (v == curv) {
      bits.push_back(0);
      enc(u);
    } else if (v == curv + 1) {
      curv = v;
      bits.push_back(1);
      enc(u);
    } else {
      curv = v;
      bits.push_back(1);
      enc(v);
      bits.push_back(0);
      enc(u);
    }
  }
  std::size_t pad = (6 - bits.size() % 6) % 6;
  // Padding with ones could otherwise read as an edge to vertex n-1.
  if (k < 6 && n == (std::size_t{1} << k) && pad >= k && curv + 1 < n) {
    bits.push_back(0);
    pad = (6 - bits.size() % 6) % 6;
  }
  bits.insert(bits.end(), pad, 1);
  std::string out = ":";
  append_size(out, n);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int c = 0;
    for (std::size_t j = 0; j < 6; ++j) c = (c << 1) | bits[i + j];
    out += static_cast<char>(c + 63);
  }
  return out;
}

Graph read_sparse6(std::string_view bytes) {
  ByteReader r = strip(bytes, ">>sparse6<<");
  if (r.done() || r.data[0] != ':') throw ParseError("sparse6 must start with ':'", 1, r.offset());
  ++r.pos;
  const std::size_t n = read_size(r);
  std::size_t k = 1;
  while ((std::size_t{1} << k) < n) ++k;

  std::vector<std::pair<Vertex, Vertex>> edges;
  int d = 0, dlen = 0;
  std::size_t v = 0;
  while (true) {
    if (dlen < 1) {
      if (r.done()) break;
      d = r.next("sparse6 payload");
      dlen = 6;
    }
    --dlen;
    int b = (d >> dlen) & 1;
    std::uint64_t x = static_cast<std::uint64_t>(d & ((1 << dlen) - 1));
    std::size_t xlen = static_cast<std::size_t>(dlen);
    bool truncated = false;
    while (xlen < k) {
      if (r.done()) {
        truncated = true;
        break;
      }
      d = r.next("sparse6 payload");
      dlen = 6;
      x = (x << 6) + static_cast<std::uint64_t>(d);
      xlen += 6;
    }
    if (truncated) break;
    x >>= (xlen - k);
    dlen = static_cast<int>(xlen - k);
    if (b == 1) ++v;
    if (x >= n || v >= n) break;
    if (x > v) {
      v = x;
    } else {
      if (x == v) throw ParseError("self-loop at vertex " + std::to_string(v), 1, r.offset() - 1);
      edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(v));
    }
  }
  // Whatever follows the terminating record must still be valid bytes.
  while (!r.done()) r.next("sparse6 payload");
  return Graph::from_edges(n, edges);
}

Graph read_graph(std::string_view bytes) {
  std::string_view body = bytes;
  if (body.substr(0, 11) == ">>sparse6<<") return read_sparse6(bytes);
  if (body.substr(0, 10) == ">>graph6<<") return read_graph6(bytes);
  if (!body.empty() && body.front() == ':') return read_sparse6(bytes);
  return read_graph6(bytes);
}

nlohmann::json certificate_to_json(const CertificateDocument& doc) {
  const Certificate& c = doc.certificate;
  nlohmann::json j;
  j["graph_id"] = c.graph_id;
  j["n"] = doc.n;
  j["valency"] = doc.valency;
  j["group_order"] = to_string(c.group_order);
  j["method"] = std::string(to_string(c.method));
  j["element"] = format_cycles(c.element);
  j["element_order"] = static_cast<std::uint64_t>(c.element_order);
  j["cycle_length"] = c.cycle_length;
  j["trace"] = c.trace;
  j["verified"] = doc.verified;
  j["tool_version"] = doc.tool_version;
  j["seed"] = c.seed;
  return j;
}

namespace {

[[noreturn]] void field_error(const std::string& key, const std::string& what) {
  throw ParseError("certificate field '" + key + "' " + what, 1, 1);
}

const nlohmann::json& field(const nlohmann::json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) field_error(key, "is missing");
  return *it;
}

std::uint64_t unsigned_field(const nlohmann::json& j, const std::string& key) {
  const auto& v = field(j, key);
  if (!v.is_number_unsigned()) field_error(key, "must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::string string_field(const nlohmann::json& j, const std::string& key) {
  const auto& v = field(j, key);
  if (!v.is_string()) field_error(key, "must be a string");
  return v.get<std::string>();
}

}  // namespace

CertificateDocument certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("certificate must be a JSON object", 1, 1);
  CertificateDocument doc;
  Certificate& c = doc.certificate;
  c.graph_id = string_field(j, "graph_id");
  doc.n = unsigned_field(j, "n");
  if (doc.n == 0 || doc.n > kMaxGraphOrder) field_error("n", "is out of range");
  doc.valency = unsigned_field(j, "valency");
  std::string order = string_field(j, "group_order");
  if (order.empty() || order.size() > 4096 ||
      !std::all_of(order.begin(), order.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    field_error("group_order", "must be a decimal string");
  c.group_order = BigInt(order);
  auto method = method_from_string(string_field(j, "method"));
  if (!method) field_error("method", "has an unknown tag");
  c.method = *method;
  try {
    c.element = parse_cycles(string_field(j, "element"), doc.n);
  } catch (const ParseError& e) {
    field_error("element", std::string("is malformed: ") + e.what());
  }
  c.element_order = unsigned_field(j, "element_order");
  c.cycle_length = unsigned_field(j, "cycle_length");
  const auto& trace = field(j, "trace");
  if (!trace.is_array()) field_error("trace", "must be an array of strings");
  for (const auto& step : trace) {
    if (!step.is_string()) field_error("trace", "must be an array of strings");
    c.trace.push_back(step.get<std::string>());
  }
  const auto& verified = field(j, "verified");
  if (!verified.is_boolean()) field_error("verified", "must be a boolean");
  doc.verified = verified.get<bool>();
  doc.tool_version = string_field(j, "tool_version");
  c.seed = unsigned_field(j, "seed");
  return doc;
}

CertificateDocument parse_certificate(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) throw ParseError("certificate is not valid JSON", 1, 1);
  return certificate_from_json(j);
}

nlohmann::json manifest_entry(const CorpusInstance& instance) {
  nlohmann::json j;
  j["id"] = instance.id;
  j["family"] = instance.family;
  j["params"] = instance.params;
  j["n"] = instance.graph.order();
  j["valency"] = instance.graph.valency().value_or(0);
  j["group_order"] = to_string(instance.group.order());
  j["seed"] = instance.seed;
  if (!instance.note.empty()) j["note"] = instance.note;
  return j;
}

nlohmann::json report_to_json(const ProofReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"check_name", c.name},
                      {"anchor", c.anchor},
                      {"applicable", c.applicable},
                      {"passed", c.passed},
                      {"detail", c.detail}});
  return {{"checks", checks}, {"all_passed", report.all_passed()}};
}

}  // namespace polycirc
