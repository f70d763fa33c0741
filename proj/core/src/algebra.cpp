#include "nakayama/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace nakayama {

std::string_view to_string(Orientation kind) {
  return kind == Orientation::linear ? "linear" : "cyclic";
}

Orientation parse_orientation(std::string_view text) {
  if (text == "linear") return Orientation::linear;
  if (text == "cyclic") return Orientation::cyclic;
  throw Error(ErrorCode::parse_error,
              "unknown orientation '" + std::string(text) + "' (expected linear or cyclic)");
}

std::string to_string(const IndecModule& m) {
  return "M(" + std::to_string(m.top) + "," + std::to_string(m.len) + ")";
}

std::string to_string(const MaybeModule& m) { return m ? to_string(*m) : "0"; }

// ---------------------------------------------------------------------------
// ModuleSet

ModuleSet::ModuleSet(std::initializer_list<IndecModule> items)
    : ModuleSet(std::vector<IndecModule>(items)) {}

ModuleSet::ModuleSet(std::vector<IndecModule> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool ModuleSet::contains(const IndecModule& m) const {
  return std::binary_search(items_.begin(), items_.end(), m);
}

ModuleSet ModuleSet::with(const IndecModule& m) const {
  auto copy = items_;
  copy.push_back(m);
  return ModuleSet(std::move(copy));
}

ModuleSet ModuleSet::without(const IndecModule& m) const {
  ModuleSet out;
  out.items_.reserve(items_.size());
  std::copy_if(items_.begin(), items_.end(), std::back_inserter(out.items_),
               [&](const IndecModule& x) { return x != m; });
  return out;
}

std::size_t ModuleSet::overlap(const ModuleSet& other) const {
  std::vector<IndecModule> common;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(common));
  return common.size();
}

std::string to_string(const ModuleSet& ms) {
  if (ms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += " + ";
    out += to_string(ms[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Algebra

int Algebra::kupisch(Vertex v) const {
  if (!is_vertex(v))
    throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(v) +
                                               " outside 1.." + std::to_string(size()));
  return kupisch_[static_cast<std::size_t>(v - 1)];
}

Vertex Algebra::wrap(Vertex v) const noexcept {
  if (!is_cyclic()) return v;
  const int n = size();
  return ((v - 1) % n + n) % n + 1;
}

bool Algebra::is_valid(const IndecModule& m) const noexcept {
  return is_vertex(m.top) && m.len >= 1 && m.len <= kupisch_[static_cast<std::size_t>(m.top - 1)];
}

void Algebra::require_valid(const IndecModule& m) const {
  if (!is_valid(m))
    throw Error(ErrorCode::invalid_module,
                to_string(m) + " is not a module over " + nakayama::to_string(*this));
}

void Algebra::require_valid(const ModuleSet& ms) const {
  for (const auto& m : ms) require_valid(m);
}

IndecModule Algebra::projective(Vertex v) const { return {v, kupisch(v)}; }

IndecModule Algebra::simple(Vertex v) const {
  kupisch(v);
  return {v, 1};
}

bool Algebra::is_projective(const IndecModule& m) const {
  require_valid(m);
  return m.len == kupisch(m.top);
}

Vertex Algebra::socle(const IndecModule& m) const { return wrap(m.top - m.len + 1); }

std::vector<Vertex> Algebra::layers(const IndecModule& m) const {
  std::vector<Vertex> out(static_cast<std::size_t>(m.len));
  for (int t = 0; t < m.len; ++t) out[static_cast<std::size_t>(t)] = wrap(m.top - t);
  return out;
}

int Algebra::dimension() const noexcept {
  return std::accumulate(kupisch_.begin(), kupisch_.end(), 0);
}

int Algebra::loewy_length() const noexcept {
  return *std::max_element(kupisch_.begin(), kupisch_.end());
}

bool Algebra::radical_square_zero() const noexcept { return loewy_length() <= 2; }

bool Algebra::self_injective() const noexcept {
  if (is_cyclic())
    return std::all_of(kupisch_.begin(), kupisch_.end(),
                       [&](int c) { return c == kupisch_.front(); });
  return size() == 1;
}

std::string to_string(const Algebra& a) {
  std::ostringstream os;
  os << to_string(a.kind()) << " (";
  for (int v = 1; v <= a.size(); ++v) os << (v > 1 ? "," : "") << a.kupisch(v);
  os << ")";
  return os.str();
}

Algebra validate_kupisch(Orientation kind, std::vector<int> c) {
  const auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::invalid_kupisch, "invalid Kupisch series: " + msg);
  };
  if (c.empty()) throw Error(ErrorCode::invalid_size, "Kupisch series must be non-empty");
  const int n = static_cast<int>(c.size());
  const auto at = [&](int i) { return c[static_cast<std::size_t>(i - 1)]; };
  const auto idx = [](int i) { return "c[" + std::to_string(i) + "]"; };

  for (int i = 1; i <= n; ++i)
    if (at(i) < 1) fail(idx(i) + " = " + std::to_string(at(i)) + " must be positive");

  if (kind == Orientation::linear) {
    if (at(1) != 1) fail("c[1] = " + std::to_string(at(1)) + " must be 1 for a linear quiver");
    for (int i = 2; i <= n; ++i) {
      if (at(i) - 1 > at(i - 1))
        fail(idx(i) + "-1 > " + idx(i - 1) + " at i=" + std::to_string(i) + " (" +
             std::to_string(at(i) - 1) + " > " + std::to_string(at(i - 1)) + ")");
      if (at(i) > i) fail(idx(i) + " = " + std::to_string(at(i)) + " exceeds " + std::to_string(i));
      if (at(i) < 2)
        fail(idx(i) + " = 1 at i=" + std::to_string(i) +
             " disconnects the quiver (arrow " + std::to_string(i) + "->" +
             std::to_string(i - 1) + " would vanish)");
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      if (at(i) < 2)
        fail(idx(i) + " = " + std::to_string(at(i)) + " at i=" + std::to_string(i) +
             "; a cyclic quiver forces every entry >= 2");
      const int prev = i == 1 ? n : i - 1;
      if (at(i) - 1 > at(prev))
        fail(idx(i) + "-1 > " + idx(prev) + " at i=" + std::to_string(i) + " (" +
             std::to_string(at(i) - 1) + " > " + std::to_string(at(prev)) + ")");
    }
  }
  return Algebra(kind, std::move(c));
}

Algebra make_rsz_nakayama(int n, Orientation kind) {
  if (n < 1) throw Error(ErrorCode::invalid_size, "number of simples must be >= 1");
  std::vector<int> c(static_cast<std::size_t>(n), 2);
  if (kind == Orientation::linear) c.front() = 1;
  return validate_kupisch(kind, std::move(c));
}

ModuleSet indecomposables(const Algebra& a) {
  std::vector<IndecModule> out;
  out.reserve(static_cast<std::size_t>(a.dimension()));
  for (Vertex v = 1; v <= a.size(); ++v)
    for (int l = 1; l <= a.kupisch(v); ++l) out.push_back({v, l});
  return ModuleSet(std::move(out));
}

MaybeModule submodule(const Algebra& a, const IndecModule& m, int k) {
  a.require_valid(m);
  if (k < 0 || k > m.len)
    throw Error(ErrorCode::out_of_range, "submodule length " + std::to_string(k) +
                                             " outside 0.." + std::to_string(m.len));
  if (k == 0) return std::nullopt;
  return IndecModule{a.wrap(m.top - m.len + k), k};
}

MaybeModule quotient_top(const Algebra& a, const IndecModule& m, int k) {
  a.require_valid(m);
  if (k < 0 || k > m.len)
    throw Error(ErrorCode::out_of_range, "quotient length " + std::to_string(k) +
                                             " outside 0.." + std::to_string(m.len));
  if (k == 0) return std::nullopt;
  return IndecModule{m.top, k};
}

IndecModule injective_env_vertex(const Algebra& a, Vertex j) {
  a.kupisch(j);
  // {l : l <= c[j+l-1]} is downward closed by the Kupisch condition.
  int l = 1;
  while (true) {
    const Vertex top = j + l;
    if (!a.is_cyclic() && top > a.size()) break;
    if (l + 1 > a.kupisch(a.wrap(top))) break;
    ++l;
  }
  return {a.wrap(j + l - 1), l};
}

bool is_injective(const Algebra& a, const IndecModule& m) {
  a.require_valid(m);
  return injective_env_vertex(a, a.socle(m)) == m;
}

// ---------------------------------------------------------------------------
// Quotient algebras

VertexSet QuotientAlgebra::surviving() const {
  VertexSet out;
  for (const auto& verts : component_vertices) out.insert(verts.begin(), verts.end());
  return out;
}

bool QuotientAlgebra::is_semisimple() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Algebra& c) { return c.loewy_length() == 1; });
}

IndecModule QuotientAlgebra::to_parent(std::size_t component, const IndecModule& m) const {
  const auto& verts = component_vertices.at(component);
  components.at(component).require_valid(m);
  return {verts[static_cast<std::size_t>(m.top - 1)], m.len};
}

std::optional<std::pair<std::size_t, IndecModule>> QuotientAlgebra::from_parent(
    const IndecModule& m) const {
  const auto wrap_parent = [&](Vertex v) {
    if (parent_kind == Orientation::linear) return v;
    return ((v - 1) % parent_size + parent_size) % parent_size + 1;
  };
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& verts = component_vertices[c];
    const auto it = std::find(verts.begin(), verts.end(), m.top);
    if (it == verts.end()) continue;
    const IndecModule local{static_cast<Vertex>(it - verts.begin()) + 1, m.len};
    const Algebra& comp = components[c];
    if (!comp.is_valid(local)) return std::nullopt;
    for (int t = 0; t < m.len; ++t) {
      const Vertex lv = comp.wrap(local.top - t);
      if (verts[static_cast<std::size_t>(lv - 1)] != wrap_parent(m.top - t)) return std::nullopt;
    }
    return std::make_pair(c, local);
  }
  return std::nullopt;
}

namespace {

// Maximal runs of surviving vertices along the arrows, each listed from its
// bottom (sink) upwards.
std::vector<std::vector<Vertex>> surviving_runs(const Algebra& a, const VertexSet& killed) {
  std::vector<std::vector<Vertex>> runs;
  const int n = a.size();
  if (!a.is_cyclic()) {
    std::vector<Vertex> run;
    for (Vertex v = 1; v <= n + 1; ++v) {
      if (v <= n && !killed.count(v)) {
        run.push_back(v);
      } else if (!run.empty()) {
        runs.push_back(std::move(run));
        run.clear();
      }
    }
    return runs;
  }
  // Cyclic with at least one killed vertex: start just above a killed one.
  const Vertex start = *killed.begin();
  std::vector<Vertex> run;
  for (int step = 1; step <= n; ++step) {
    const Vertex v = a.wrap(start + step);
    if (!killed.count(v)) {
      run.push_back(v);
    } else if (!run.empty()) {
      runs.push_back(std::move(run));
      run.clear();
    }
  }
  if (!run.empty()) runs.push_back(std::move(run));
  return runs;
}

void sort_components(QuotientAlgebra& q) {
  std::vector<std::size_t> order(q.components.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return q.component_vertices[x].front() < q.component_vertices[y].front();
  });
  std::vector<Algebra> comps;
  std::vector<std::vector<Vertex>> verts;
  for (auto i : order) {
    comps.push_back(q.components[i]);
    verts.push_back(q.component_vertices[i]);
  }
  q.components = std::move(comps);
  q.component_vertices = std::move(verts);
}

}  // namespace

QuotientAlgebra quotient_algebra(const Algebra& a, const VertexSet& killed) {
  for (Vertex v : killed)
    if (!a.is_vertex(v))
      throw Error(ErrorCode::unknown_vertex,
                  "cannot kill vertex " + std::to_string(v) + " of " + to_string(a));
  QuotientAlgebra q;
  q.parent_kind = a.kind();
  q.parent_size = a.size();
  q.killed = killed;
  if (a.is_cyclic() && killed.empty()) {
    q.components.push_back(a);
    std::vector<Vertex> verts(static_cast<std::size_t>(a.size()));
    std::iota(verts.begin(), verts.end(), 1);
    q.component_vertices.push_back(std::move(verts));
    return q;
  }
  for (auto& run : surviving_runs(a, killed)) {
    std::vector<int> c(run.size());
    for (std::size_t k = 0; k < run.size(); ++k)
      c[k] = std::min(a.kupisch(run[k]), static_cast<int>(k) + 1);
    q.components.push_back(validate_kupisch(Orientation::linear, std::move(c)));
    q.component_vertices.push_back(std::move(run));
  }
  sort_components(q);
  return q;
}

QuotientAlgebra quotient_algebra(const QuotientAlgebra& base, const VertexSet& more_killed) {
  QuotientAlgebra q;
  q.parent_kind = base.parent_kind;
  q.parent_size = base.parent_size;
  q.killed = base.killed;
  for (Vertex v : more_killed) {
    if (v < 1 || v > base.parent_size)
      throw Error(ErrorCode::unknown_vertex, "cannot kill vertex " + std::to_string(v));
    q.killed.insert(v);
  }
  for (std::size_t c = 0; c < base.components.size(); ++c) {
    const auto& verts = base.component_vertices[c];
    VertexSet local;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (more_killed.count(verts[k])) local.insert(static_cast<Vertex>(k) + 1);
    const auto sub = quotient_algebra(base.components[c], local);
    for (std::size_t s = 0; s < sub.components.size(); ++s) {
      std::vector<Vertex> mapped;
      for (Vertex lv : sub.component_vertices[s])
        mapped.push_back(verts[static_cast<std::size_t>(lv - 1)]);
      q.components.push_back(sub.components[s]);
      q.component_vertices.push_back(std::move(mapped));
    }
  }
  sort_components(q);
  return q;
}

QuotientAlgebra semisimple_algebra(int n) {
  if (n < 0) throw Error(ErrorCode::invalid_size, "number of simples must be >= 0");
  QuotientAlgebra q;
  q.parent_size = n;
  for (Vertex v = 1; v <= n; ++v) {
    q.components.push_back(validate_kupisch(Orientation::linear, {1}));
    q.component_vertices.push_back({v});
  }
  return q;
}

// ---------------------------------------------------------------------------
// Module literals

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorCode::parse_error, "malformed module literal '" + std::string(whole) + "'");
  return value;
}

}  // namespace

IndecModule parse_module(const Algebra& a, std::string_view text) {
  const auto whole = text;
  text = trim(text);
  if (text.size() < 4 || text[1] != '(' || text.back() != ')')
    throw Error(ErrorCode::parse_error, "malformed module literal '" + std::string(whole) +
                                            "' (expected M(top,len), P(i) or S(i))");
  const char head = text.front();
  const auto args = text.substr(2, text.size() - 3);
  IndecModule m;
  if (head == 'M') {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos)
      throw Error(ErrorCode::parse_error, "malformed module literal '" + std::string(whole) + "'");
    m = {parse_int(args.substr(0, comma), whole), parse_int(args.substr(comma + 1), whole)};
  } else if (head == 'P' || head == 'S') {
    const Vertex v = parse_int(args, whole);
    if (!a.is_vertex(v))
      throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(v) + " in '" +
                                                 std::string(whole) + "' is not a vertex");
    m = head == 'P' ? a.projective(v) : a.simple(v);
  } else {
    throw Error(ErrorCode::parse_error, "malformed module literal '" + std::string(whole) + "'");
  }
  a.require_valid(m);
  return m;
}

}  // namespace nakayama
