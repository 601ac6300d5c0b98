#include "gammasym/roots.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace gammasym {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string upper;
  for (char c : text) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "A") return Family::A;
  if (upper == "B") return Family::B;
  if (upper == "C") return Family::C;
  if (upper == "D") return Family::D;
  if (upper == "E") return Family::E;
  if (upper == "F") return Family::F;
  if (upper == "G") return Family::G;
  if (upper == "BC") return Family::BC;
  throw std::invalid_argument("unknown root system family '" + std::string(text) + "'");
}

RootSystemType::RootSystemType(Family family, int rank) : family_(family), rank_(rank) {
  auto fail = [&](const char* constraint) {
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for type " +
                                std::string(to_string(family)) + ": requires " + constraint);
  };
  if (rank > kMaxRank) fail("rank <= 32");
  switch (family) {
    case Family::A: if (rank < 1) fail("rank >= 1"); break;
    case Family::B: if (rank < 2) fail("rank >= 2"); break;
    case Family::C: if (rank < 2) fail("rank >= 2"); break;
    case Family::D: if (rank < 4) fail("rank >= 4"); break;
    case Family::E: if (rank < 6 || rank > 8) fail("rank in {6,7,8}"); break;
    case Family::F: if (rank != 4) fail("rank = 4"); break;
    case Family::G: if (rank != 2) fail("rank = 2"); break;
    case Family::BC: if (rank < 1) fail("rank >= 1"); break;
  }
}

std::string RootSystemType::name() const {
  return std::string(to_string(family_)) + std::to_string(rank_);
}

int Root::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

std::string Root::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs[i]);
  }
  return out + ")";
}

std::vector<int> cartan_matrix(RootSystemType type) {
  const int r = type.rank();
  std::vector<int> c(static_cast<std::size_t>(r * r), 0);
  auto at = [&](int k, int j) -> int& { return c[static_cast<std::size_t>((k - 1) * r + (j - 1))]; };
  auto bond = [&](int k, int j) { at(k, j) = -1; at(j, k) = -1; };
  for (int i = 1; i <= r; ++i) at(i, i) = 2;

  switch (type.family()) {
    case Family::A:
      for (int i = 1; i < r; ++i) bond(i, i + 1);
      break;
    case Family::B:
    case Family::BC:
      // alpha_r = e_r is short
      for (int i = 1; i < r - 1; ++i) bond(i, i + 1);
      if (r >= 2) {
        at(r - 1, r) = -2;
        at(r, r - 1) = -1;
      }
      break;
    case Family::C:
      // alpha_r = 2e_r is long
      for (int i = 1; i < r - 1; ++i) bond(i, i + 1);
      at(r - 1, r) = -1;
      at(r, r - 1) = -2;
      break;
    case Family::D:
      for (int i = 1; i < r - 1; ++i) bond(i, i + 1);
      bond(r - 2, r);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < r; ++i) bond(i, i + 1);
      break;
    case Family::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      bond(1, 2);
      at(2, 3) = -2;
      at(3, 2) = -1;
      bond(3, 4);
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long
      at(1, 2) = -1;
      at(2, 1) = -3;
      break;
  }
  return c;
}

namespace {

// Positive roots by root-string closure, layer by layer in height. For beta
// and a simple root alpha_j, the alpha_j-string through beta runs from
// beta - p alpha_j to beta + q alpha_j with p - q = <beta, alpha_j^vee>.
std::vector<Root> close_under_root_strings(int r, const std::vector<int>& cartan) {
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> layer;
  for (int j = 0; j < r; ++j) {
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(j)] = 1;
    all.insert(e);
    layer.push_back(std::move(e));
  }

  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int j = 0; j < r; ++j) {
        int p = 0;
        std::vector<int> down = beta;
        while (down[static_cast<std::size_t>(j)] > 0) {
          --down[static_cast<std::size_t>(j)];
          if (!all.contains(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int k = 0; k < r; ++k) {
          pairing += beta[static_cast<std::size_t>(k)] * cartan[static_cast<std::size_t>(k * r + j)];
        }
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          ++up[static_cast<std::size_t>(j)];
          if (!all.contains(up)) next.insert(std::move(up));
        }
      }
    }
    layer.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }

  std::vector<Root> roots;
  roots.reserve(all.size());
  for (const auto& v : all) roots.push_back(Root{v});
  return roots;
}

}  // namespace

RootSystem::RootSystem(RootSystemType type, std::vector<int> cartan, std::vector<Root> roots)
    : type_(type), cartan_(std::move(cartan)), roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end());
  roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());

  const int r = type_.rank();
  support_.reserve(roots_.size());
  odd_.reserve(roots_.size());
  std::vector<int> top(static_cast<std::size_t>(r), 0);
  for (const Root& root : roots_) {
    IndexSet::Mask s = 0, o = 0;
    for (int j = 0; j < r; ++j) {
      const int c = root.coeffs[static_cast<std::size_t>(j)];
      if (c != 0) s |= IndexSet::Mask{1} << j;
      if (c % 2 != 0) o |= IndexSet::Mask{1} << j;
      top[static_cast<std::size_t>(j)] = std::max(top[static_cast<std::size_t>(j)], c);
    }
    support_.push_back(s);
    odd_.push_back(o);
  }

  auto it = std::lower_bound(roots_.begin(), roots_.end(), Root{top});
  if (it == roots_.end() || it->coeffs != top) {
    throw std::logic_error("no coefficient-wise maximal root in " + type_.name());
  }
  highest_ = static_cast<std::size_t>(it - roots_.begin());
}

int RootSystem::cartan(int k, int j) const {
  const int r = rank();
  if (k < 1 || k > r || j < 1 || j > r) {
    throw std::out_of_range("Cartan index out of range for " + type_.name());
  }
  return cartan_[static_cast<std::size_t>((k - 1) * r + (j - 1))];
}

std::vector<std::vector<int>> RootSystem::cartan_matrix() const {
  const int r = rank();
  std::vector<std::vector<int>> m(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    m[static_cast<std::size_t>(k)].assign(cartan_.begin() + k * r, cartan_.begin() + (k + 1) * r);
  }
  return m;
}

std::vector<Root> RootSystem::simple_roots() const {
  std::vector<Root> out;
  for (int j = 0; j < rank(); ++j) {
    Root e{std::vector<int>(static_cast<std::size_t>(rank()), 0)};
    e.coeffs[static_cast<std::size_t>(j)] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

bool RootSystem::contains(const Root& root) const {
  return std::binary_search(roots_.begin(), roots_.end(), root);
}

std::optional<std::size_t> RootSystem::index_of(const Root& root) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), root);
  if (it == roots_.end() || *it != root) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

RootSystem build(RootSystemType type) {
  const int r = type.rank();
  if (type.family() != Family::BC) {
    auto cartan = cartan_matrix(type);
    auto roots = close_under_root_strings(r, cartan);
    return RootSystem(type, std::move(cartan), std::move(roots));
  }

  // BC_r: B_r list plus the C_r list rewritten in B coordinates. C's last
  // simple root 2e_r equals twice B's e_r, so the last coefficient doubles.
  // For r = 1 both lists degenerate to A_1 data: {e_1} and {2e_1}.
  std::vector<Root> roots;
  if (r == 1) {
    roots = {Root{{1}}, Root{{2}}};
  } else {
    roots = close_under_root_strings(r, cartan_matrix(RootSystemType(Family::B, r)));
    auto c_roots = close_under_root_strings(r, cartan_matrix(RootSystemType(Family::C, r)));
    for (Root& root : c_roots) {
      root.coeffs.back() *= 2;
      roots.push_back(std::move(root));
    }
  }
  std::vector<int> cartan = r == 1 ? std::vector<int>{2} : cartan_matrix(RootSystemType(Family::B, r));
  return RootSystem(type, std::move(cartan), std::move(roots));
}

int coefficient(const Root& root, int j) {
  if (j < 1 || j > root.rank()) {
    throw std::out_of_range("coefficient index " + std::to_string(j) + " outside [1, " +
                            std::to_string(root.rank()) + "]");
  }
  return root.coeffs[static_cast<std::size_t>(j - 1)];
}

int evaluate_on_xi_sum(const Root& root, IndexSet J) {
  if (!J.fits(root.rank())) {
    throw std::out_of_range("index set " + J.to_string() + " exceeds rank " + std::to_string(root.rank()));
  }
  int sum = 0;
  for (int j : J.indices()) sum += root.coeffs[static_cast<std::size_t>(j - 1)];
  return sum;
}

}  // namespace gammasym
