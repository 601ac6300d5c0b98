#include "gammasym/antipodal.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>

#include "gammasym/admissible.hpp"

namespace gammasym {

CoweightVector CoweightVector::xi(IndexSet I, int rank) {
  if (!I.fits(rank)) {
    throw std::invalid_argument("index set " + I.to_string() + " exceeds rank " + std::to_string(rank));
  }
  CoweightVector v{std::vector<int>(static_cast<std::size_t>(rank), 0)};
  for (int i : I.indices()) v.coords[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

bool CoweightVector::dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

std::string CoweightVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

CoweightVector reflect(const CoweightVector& v, int j, const RootSystem& system) {
  const int r = system.rank();
  if (static_cast<int>(v.coords.size()) != r) {
    throw std::invalid_argument("coweight of length " + std::to_string(v.coords.size()) +
                                " for rank " + std::to_string(r));
  }
  if (j < 1 || j > r) {
    throw std::out_of_range("reflection index " + std::to_string(j) + " outside [1, " +
                            std::to_string(r) + "]");
  }
  CoweightVector out = v;
  const int vj = v.coords[static_cast<std::size_t>(j - 1)];
  for (int k = 1; k <= r; ++k) out.coords[static_cast<std::size_t>(k - 1)] -= vj * system.cartan(k, j);
  return out;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Weyl group order exceeds 64 bits");
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f = checked_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

std::uint64_t pow2(int n) {
  if (n >= 64) throw std::overflow_error("Weyl group order exceeds 64 bits");
  return std::uint64_t{1} << n;
}

}  // namespace

std::uint64_t weyl_group_order(const RootSystemType& type) {
  const int n = type.rank();
  switch (type.family()) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C:
    case Family::BC: return checked_mul(pow2(n), factorial(n));
    case Family::D: return checked_mul(pow2(n - 1), factorial(n));
    case Family::E:
      if (n == 6) return 51'840;
      if (n == 7) return 2'903'040;
      return 696'729'600;
    case Family::F: return 1'152;
    case Family::G: return 12;
  }
  throw std::invalid_argument("unknown type");
}

std::vector<RootSystemType> dynkin_components(const RootSystem& system, IndexSet nodes) {
  const int r = system.rank();
  if (!nodes.fits(r)) throw std::invalid_argument("node set exceeds rank");

  auto linked = [&](int a, int b) { return a != b && system.cartan(a, b) != 0; };
  std::vector<RootSystemType> out;
  IndexSet remaining = nodes;

  while (!remaining.empty()) {
    // Flood fill from the smallest remaining node.
    std::vector<int> comp{remaining.indices().front()};
    remaining = remaining.without(comp.front());
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int b : remaining.indices()) {
        if (linked(comp[head], b)) {
          comp.push_back(b);
          remaining = remaining.without(b);
        }
      }
    }

    const int n = static_cast<int>(comp.size());
    std::vector<int> degree(comp.size(), 0);
    int branch = -1;
    std::optional<std::pair<int, int>> double_bond;
    bool triple_bond = false;
    for (std::size_t a = 0; a < comp.size(); ++a) {
      for (std::size_t b = 0; b < comp.size(); ++b) {
        if (!linked(comp[a], comp[b])) continue;
        ++degree[a];
        const int weight = system.cartan(comp[a], comp[b]) * system.cartan(comp[b], comp[a]);
        if (weight == 3) triple_bond = true;
        if (weight == 2 && a < b) double_bond = {static_cast<int>(a), static_cast<int>(b)};
      }
      if (degree[a] == 3) branch = static_cast<int>(a);
    }

    if (n == 1) {
      out.emplace_back(Family::A, 1);
    } else if (triple_bond) {
      out.emplace_back(Family::G, 2);
    } else if (double_bond) {
      const auto [a, b] = *double_bond;
      if (n == 2) {
        out.emplace_back(Family::B, 2);
      } else if (degree[static_cast<std::size_t>(a)] == 2 && degree[static_cast<std::size_t>(b)] == 2) {
        out.emplace_back(Family::F, 4);
      } else {
        // The double bond sits at an end; the end node is short for B, long for C.
        const int end = degree[static_cast<std::size_t>(a)] == 1 ? a : b;
        const int inner = end == a ? b : a;
        const bool end_short =
            system.cartan(comp[static_cast<std::size_t>(inner)], comp[static_cast<std::size_t>(end)]) == -2;
        out.emplace_back(end_short ? Family::B : Family::C, n);
      }
    } else if (branch >= 0) {
      // Arm lengths from the branch node decide D versus E.
      std::vector<int> arms;
      for (std::size_t a = 0; a < comp.size(); ++a) {
        if (!linked(comp[static_cast<std::size_t>(branch)], comp[a])) continue;
        int length = 1;
        int prev = branch;
        int cur = static_cast<int>(a);
        for (bool moved = true; moved;) {
          moved = false;
          for (std::size_t c = 0; c < comp.size(); ++c) {
            if (static_cast<int>(c) != prev && linked(comp[static_cast<std::size_t>(cur)], comp[c])) {
              prev = cur;
              cur = static_cast<int>(c);
              ++length;
              moved = true;
              break;
            }
          }
        }
        arms.push_back(length);
      }
      std::sort(arms.begin(), arms.end());
      if (arms.size() != 3) throw std::logic_error("malformed branch node in Dynkin subdiagram");
      if (arms[0] == 1 && arms[1] == 1) {
        out.emplace_back(Family::D, n);
      } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        out.emplace_back(Family::E, n);
      } else {
        throw std::logic_error("Dynkin subdiagram is not of finite type");
      }
    } else {
      out.emplace_back(Family::A, n);
    }
  }
  return out;
}

std::uint64_t stabilizer_order(const RootSystem& system, IndexSet I) {
  const IndexSet complement = IndexSet::full(system.rank()) ^ (I & IndexSet::full(system.rank()));
  std::uint64_t order = 1;
  for (const auto& type : dynkin_components(system, complement)) {
    order = checked_mul(order, weyl_group_order(type));
  }
  return order;
}

std::string_view to_string(OrbitMethod method) {
  switch (method) {
    case OrbitMethod::enumeration: return "enumeration";
    case OrbitMethod::order_formula: return "order_formula";
    case OrbitMethod::both: return "both";
  }
  return "?";
}

namespace {

// Orbit points packed one signed byte per coordinate, biased by 128 and
// stored most significant first, so that key order is lexicographic order
// on the coordinates.
template <std::size_t Words>
struct PackedCoweight {
  std::array<std::uint64_t, Words> w{};
  auto operator<=>(const PackedCoweight&) const = default;
};

template <std::size_t Words>
PackedCoweight<Words> pack(const int* v, int r) {
  PackedCoweight<Words> key;
  for (int i = 0; i < r; ++i) {
    const auto byte = static_cast<std::uint64_t>(static_cast<std::uint8_t>(v[i] + 128));
    key.w[static_cast<std::size_t>(i / 8)] |= byte << (8 * (7 - i % 8));
  }
  return key;
}

template <std::size_t Words>
void unpack(const PackedCoweight<Words>& key, int r, int* v) {
  for (int i = 0; i < r; ++i) {
    const auto byte = (key.w[static_cast<std::size_t>(i / 8)] >> (8 * (7 - i % 8))) & 0xffu;
    v[i] = static_cast<int>(byte) - 128;
  }
}

struct Walk {
  std::uint64_t size = 0;
  std::vector<CoweightVector> elements;
};

// Level-by-level walk from a dominant start. If v_j > 0 then s_j v lies one
// level further from the start, if v_j < 0 one level back, and v_j = 0 is a
// fixed point. Each new level is therefore exactly the deduplicated set of
// s_j v with v_j > 0 over the current level.
template <std::size_t Words>
Walk walk_orbit(const RootSystem& system, const CoweightVector& start, bool keep) {
  const int r = system.rank();
  std::vector<std::vector<std::pair<int, int>>> column(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) {
      const int c = system.cartan(k + 1, j + 1);
      if (c != 0) column[static_cast<std::size_t>(j)].emplace_back(k, c);
    }
  }

  using Key = PackedCoweight<Words>;
  std::vector<Key> level{pack<Words>(start.coords.data(), r)};
  std::vector<Key> next;
  std::vector<Key> kept;
  std::uint64_t total = 0;
  std::array<int, kMaxRank> v{};
  std::array<int, kMaxRank> w{};

  while (!level.empty()) {
    total += level.size();
    if (keep) kept.insert(kept.end(), level.begin(), level.end());
    next.clear();
    for (const Key& key : level) {
      unpack(key, r, v.data());
      for (int j = 0; j < r; ++j) {
        const int vj = v[static_cast<std::size_t>(j)];
        if (vj <= 0) continue;
        w = v;
        for (const auto& [k, c] : column[static_cast<std::size_t>(j)]) w[static_cast<std::size_t>(k)] -= vj * c;
        next.push_back(pack<Words>(w.data(), r));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level.swap(next);
  }

  Walk out;
  out.size = total;
  if (keep) {
    std::sort(kept.begin(), kept.end());
    out.elements.reserve(kept.size());
    for (const Key& key : kept) {
      CoweightVector e{std::vector<int>(static_cast<std::size_t>(r))};
      unpack(key, r, e.coords.data());
      out.elements.push_back(std::move(e));
    }
  }
  return out;
}

Walk walk(const RootSystem& system, const CoweightVector& start, bool keep) {
  // Every orbit coordinate is +-beta(start) for a root beta, so the height of
  // the highest root bounds them; ranks <= 32 keep that well inside a byte.
  const int bound = system.highest_root().height() *
                    *std::max_element(start.coords.begin(), start.coords.end());
  if (bound > 127) throw std::out_of_range("orbit coordinates exceed the packed range");
  const int r = system.rank();
  if (r <= 8) return walk_orbit<1>(system, start, keep);
  if (r <= 16) return walk_orbit<2>(system, start, keep);
  return walk_orbit<4>(system, start, keep);
}

}  // namespace

OrbitResult orbit(const RootSystem& system, IndexSet I, const OrbitOptions& options) {
  if (I.empty()) throw std::invalid_argument("orbit of xi_I needs a non-empty index set");
  if (!I.fits(system.rank())) {
    throw std::invalid_argument("index set " + I.to_string() + " exceeds rank " +
                                std::to_string(system.rank()));
  }
  if (options.budget == 0) throw std::invalid_argument("orbit budget must be positive");

  OrbitResult result;
  std::optional<std::uint64_t> predicted;
  try {
    result.weyl_order = weyl_group_order(system.type());
    result.stabilizer_order = stabilizer_order(system, I);
    predicted = result.weyl_order / result.stabilizer_order;
  } catch (const std::overflow_error&) {
    result.note = "order formula overflows 64 bits";
  }

  if (!options.enumerate) {
    if (!predicted) throw std::overflow_error(result.note);
    result.size = *predicted;
    result.method = OrbitMethod::order_formula;
    return result;
  }

  if (predicted && *predicted > options.budget) {
    result.size = *predicted;
    result.method = OrbitMethod::order_formula;
    result.budget_exceeded = true;
    result.note = "predicted orbit size " + std::to_string(*predicted) + " exceeds the budget of " +
                  std::to_string(options.budget) + " elements; enumeration skipped";
    return result;
  }
  if (!predicted) throw std::overflow_error("orbit size unknown; refusing an unbounded enumeration");

  Walk w = walk(system, CoweightVector::xi(I, system.rank()), options.keep_elements);
  if (w.size != *predicted) {
    throw DiscrepancyError("orbit of xi_" + I.to_string() + " in " + system.type().name() + " has " +
                           std::to_string(w.size) + " elements but |W|/|W_I| = " +
                           std::to_string(*predicted));
  }
  result.size = w.size;
  result.method = OrbitMethod::both;
  if (options.keep_elements) result.elements = std::move(w.elements);
  return result;
}

std::uint64_t enumerate_orbit_size(const RootSystem& system, IndexSet I) {
  if (I.empty() || !I.fits(system.rank())) throw std::invalid_argument("bad index set " + I.to_string());
  return walk(system, CoweightVector::xi(I, system.rank()), false).size;
}

std::uint64_t two_number(const RootSystem& system, IndexSet I) {
  if (auto witness = admissibility_witness(system, I)) {
    throw NotAdmissibleError("index set " + I.to_string() + " is not admissible for " +
                             system.type().name() + ": root " + witness->to_string() +
                             " has even coefficients on every index of the set and is nonzero on it");
  }
  return orbit(system, I).size;
}

void write_orbit_dump(std::ostream& out, std::span<const CoweightVector> elements) {
  for (const auto& e : elements) {
    for (int c : e.coords) {
      if (c < INT16_MIN || c > INT16_MAX) throw std::out_of_range("coordinate exceeds int16");
      const auto u = static_cast<std::uint16_t>(static_cast<std::int16_t>(c));
      const char bytes[2] = {static_cast<char>(u & 0xffu), static_cast<char>(u >> 8)};
      out.write(bytes, 2);
    }
  }
}

std::vector<CoweightVector> read_orbit_dump(std::istream& in, int rank) {
  std::vector<CoweightVector> out;
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  char bytes[2];
  CoweightVector current;
  while (in.read(bytes, 2)) {
    const auto u = static_cast<std::uint16_t>(static_cast<unsigned char>(bytes[0]) |
                                              (static_cast<unsigned char>(bytes[1]) << 8));
    current.coords.push_back(static_cast<std::int16_t>(u));
    if (static_cast<int>(current.coords.size()) == rank) {
      out.push_back(std::move(current));
      current.coords.clear();
    }
  }
  if (!current.coords.empty() || in.gcount() != 0) throw std::runtime_error("truncated orbit dump");
  return out;
}

}  // namespace gammasym
