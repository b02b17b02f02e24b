#include "spexlab/family.hpp"

#include <charconv>
#include <vector>

#include "spexlab/error.hpp"
#include "spexlab/graph6.hpp"

namespace spexlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void invalid(const std::string& why) { throw SpexError(ErrorKind::InvalidParameter, why); }

void check_order(int n) {
  if (n < 1 || n > Graph::kMaxOrder) {
    throw SpexError(ErrorKind::CapacityExceeded, "order " + std::to_string(n) + " outside [1, 512]");
  }
}

std::vector<int> parse_ints(std::string_view body, std::size_t count, std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(',', start);
    if (end == std::string_view::npos) end = body.size();
    int value = 0;
    auto field = body.substr(start, end - start);
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
      invalid("bad integer in family spec '" + std::string(text) + "'");
    }
    out.push_back(value);
    start = end + 1;
  }
  if (out.size() != count) {
    invalid("family spec '" + std::string(text) + "' expects " + std::to_string(count) + " integers");
  }
  return out;
}

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(overloaded{
                 [](const ExtremalH& s) {
                   check_order(s.n);
                   if (s.k < 1 || s.k > s.n - 1) invalid("ExtremalH requires 1 <= k <= n-1");
                 },
                 [](const Turan& s) {
                   check_order(s.n);
                   if (s.r < 1 || s.r > s.n) invalid("Turan requires 1 <= r <= n");
                 },
                 [](const CyclePower& s) {
                   check_order(s.n);
                   if (s.k < 1) invalid("CyclePower requires k >= 1");
                   if (2 * s.k >= s.n) invalid("CyclePower requires k < n/2");
                 },
                 [](const CliqueFactor& s) {
                   check_order(s.n);
                   if (s.r < 1) invalid("CliqueFactor requires r >= 1");
                   if (s.n % (s.r + 1) != 0) invalid("CliqueFactor requires (r+1) | n");
                 },
                 [](const PerfectMatching& s) {
                   check_order(s.n);
                   if (s.n % 2 != 0) invalid("PerfectMatching requires even n");
                 },
                 [](const Custom& s) { (void)graph6_decode(s.graph6); },
             },
             spec);
}

Graph build(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      overloaded{
          [](const ExtremalH& s) {
            GraphBuilder b(s.n);
            for (int u = 0; u < s.n - 1; ++u)
              for (int v = u + 1; v < s.n - 1; ++v) b.add_edge(u, v);
            for (int u = 0; u < s.k - 1; ++u) b.add_edge(u, s.n - 1);
            return std::move(b).build();
          },
          [](const Turan& s) {
            // Part of vertex v: parts 0..n%r-1 get one extra vertex.
            std::vector<int> part(s.n);
            int v = 0;
            for (int p = 0; p < s.r; ++p) {
              const int size = s.n / s.r + (p < s.n % s.r ? 1 : 0);
              for (int i = 0; i < size; ++i) part[v++] = p;
            }
            GraphBuilder b(s.n);
            for (int x = 0; x < s.n; ++x)
              for (int y = x + 1; y < s.n; ++y)
                if (part[x] != part[y]) b.add_edge(x, y);
            return std::move(b).build();
          },
          [](const CyclePower& s) {
            GraphBuilder b(s.n);
            for (int v = 0; v < s.n; ++v)
              for (int d = 1; d <= s.k; ++d) b.connect(v, (v + d) % s.n);
            return std::move(b).build();
          },
          [](const CliqueFactor& s) {
            GraphBuilder b(s.n);
            for (int base = 0; base < s.n; base += s.r + 1)
              for (int u = base; u < base + s.r + 1; ++u)
                for (int v = u + 1; v < base + s.r + 1; ++v) b.add_edge(u, v);
            return std::move(b).build();
          },
          [](const PerfectMatching& s) {
            GraphBuilder b(s.n);
            for (int v = 0; v < s.n; v += 2) b.add_edge(v, v + 1);
            return std::move(b).build();
          },
          [](const Custom& s) { return graph6_decode(s.graph6); },
      },
      spec);
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) invalid("family spec '" + std::string(text) + "' lacks ':'");
  const auto tag = text.substr(0, colon);
  const auto body = text.substr(colon + 1);
  FamilySpec spec;
  if (tag == "g6") {
    spec = Custom{std::string(body)};
  } else if (tag == "perfectmatching") {
    spec = PerfectMatching{parse_ints(body, 1, text)[0]};
  } else {
    auto v = parse_ints(body, 2, text);
    if (tag == "h") {
      spec = ExtremalH{v[0], v[1]};
    } else if (tag == "turan") {
      spec = Turan{v[0], v[1]};
    } else if (tag == "cyclepower") {
      spec = CyclePower{v[0], v[1]};
    } else if (tag == "cliquefactor") {
      spec = CliqueFactor{v[0], v[1]};
    } else {
      invalid("unknown family '" + std::string(tag) + "'");
    }
  }
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  auto pair = [](const char* tag, int a, int b) {
    return std::string(tag) + ":" + std::to_string(a) + "," + std::to_string(b);
  };
  return std::visit(overloaded{
                        [&](const ExtremalH& s) { return pair("h", s.n, s.k); },
                        [&](const Turan& s) { return pair("turan", s.n, s.r); },
                        [&](const CyclePower& s) { return pair("cyclepower", s.n, s.k); },
                        [&](const CliqueFactor& s) { return pair("cliquefactor", s.n, s.r); },
                        [](const PerfectMatching& s) { return "perfectmatching:" + std::to_string(s.n); },
                        [](const Custom& s) { return "g6:" + s.graph6; },
                    },
                    spec);
}

int family_order(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const Custom& s) { return graph6_decode(s.graph6).order(); },
                        [](const auto& s) { return s.n; },
                    },
                    spec);
}

}  // namespace spexlab
