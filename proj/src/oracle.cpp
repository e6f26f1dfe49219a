#include "coxtwist/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "coxtwist/errors.hpp"

namespace coxtwist {

namespace {

bool supported(const IrreducibleType& t) {
  switch (t.family) {
    case Family::A: return t.rank <= 6;
    case Family::B: return t.rank <= 4;
    case Family::D: return t.rank <= 5;
    case Family::I2: return t.m <= 12;
    default: return false;
  }
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Signed permutations of n coordinates act on 2n points: coordinate i is
// point i, its negative is point i + n.
std::vector<int> coord_swap(int n, int i, int j) {
  auto p = identity_perm(2 * n);
  std::swap(p[i], p[j]);
  std::swap(p[i + n], p[j + n]);
  return p;
}

std::vector<int> sign_change(int n, int i) {
  auto p = identity_perm(2 * n);
  std::swap(p[i], p[i + n]);
  return p;
}

// (x_i, x_j) -> (-x_j, -x_i)
std::vector<int> negated_swap(int n, int i, int j) {
  auto p = identity_perm(2 * n);
  p[i] = j + n;
  p[j] = i + n;
  p[i + n] = j;
  p[j + n] = i;
  return p;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

long long classical_order(const IrreducibleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B: return (1LL << n) * factorial(n);
    case Family::D: return (1LL << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::H: return n == 3 ? 120 : 14400;
    case Family::I2: return 2LL * t.m;
  }
  return 0;
}

int positive_roots(const IrreducibleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::H: return n == 3 ? 15 : 60;
    case Family::I2: return t.m;
  }
  return 0;
}

std::vector<int> FiniteModel::mul(std::size_t f, const std::vector<int>& a, const std::vector<int>& b) const {
  const Factor& fac = factors_[f];
  if (fac.dihedral) {
    const int m = fac.points;
    const int k = a[1] ? a[0] - b[0] : a[0] + b[0];
    return {((k % m) + m) % m, a[1] ^ b[1]};
  }
  // (ab)(x) = a(b(x)): apply b first.
  std::vector<int> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

FiniteModel::Element FiniteModel::identity() const {
  Element e;
  for (const auto& f : factors_) e.push_back(f.dihedral ? std::vector<int>{0, 0} : identity_perm(f.points));
  return e;
}

FiniteModel::Element FiniteModel::generator(int s) const {
  if (s < 0 || s >= static_cast<int>(factor_of_.size()) || factor_of_[s] < 0)
    throw DomainError("generator outside the modelled subset");
  Element e = identity();
  e[factor_of_[s]] = gen_element_[s];
  return e;
}

FiniteModel::Element FiniteModel::multiply(const Element& a, const Element& b) const {
  Element out(a.size());
  for (std::size_t f = 0; f < a.size(); ++f) out[f] = mul(f, a[f], b[f]);
  return out;
}

FiniteModel::Element FiniteModel::inverse(const Element& a) const {
  Element out(a.size());
  for (std::size_t f = 0; f < a.size(); ++f) {
    if (factors_[f].dihedral) {
      const int m = factors_[f].points;
      out[f] = a[f][1] ? a[f] : std::vector<int>{(m - a[f][0]) % m, 0};
    } else {
      out[f].resize(a[f].size());
      for (std::size_t x = 0; x < a[f].size(); ++x) out[f][a[f][x]] = static_cast<int>(x);
    }
  }
  return out;
}

FiniteModel::Enumeration FiniteModel::enumerate(std::size_t f) const {
  const Factor& fac = factors_[f];
  Enumeration out;
  std::map<std::vector<int>, int> seen;
  std::deque<std::vector<int>> queue;
  const std::vector<int> id = fac.dihedral ? std::vector<int>{0, 0} : identity_perm(fac.points);
  seen[id] = 0;
  queue.push_back(id);
  while (!queue.empty()) {
    auto x = std::move(queue.front());
    queue.pop_front();
    const int len = seen[x];
    out.elements.push_back(x);
    out.length.push_back(len);
    for (int s : fac.generators) {
      auto y = mul(f, x, gen_element_[s]);
      if (seen.emplace(y, len + 1).second) queue.push_back(std::move(y));
    }
  }
  return out;
}

std::optional<FiniteModel> build_model(const CoxeterDiagram& d, GenSet t) {
  auto comps = recognize(d, t);
  if (!comps) throw DomainError("build_model: subset is not spherical");
  for (const auto& c : *comps)
    if (!supported(c.type)) return std::nullopt;

  FiniteModel m;
  m.subset_ = t;
  m.factor_of_.assign(d.rank(), -1);
  m.gen_element_.assign(d.rank(), {});
  for (const auto& c : *comps) {
    FiniteModel::Factor fac{c.type, c.layout};
    const int n = c.type.rank;
    const auto& l = c.layout;
    const int f = static_cast<int>(m.factors_.size());
    for (int s : l) m.factor_of_[s] = f;
    switch (c.type.family) {
      case Family::A:
        fac.points = n + 1;
        for (int k = 0; k < n; ++k) {
          auto p = identity_perm(n + 1);
          std::swap(p[k], p[k + 1]);
          m.gen_element_[l[k]] = p;
        }
        break;
      case Family::B:
        fac.points = 2 * n;
        m.gen_element_[l[0]] = sign_change(n, 0);
        for (int k = 1; k < n; ++k) m.gen_element_[l[k]] = coord_swap(n, k - 1, k);
        break;
      case Family::D:
        fac.points = 2 * n;
        m.gen_element_[l[0]] = coord_swap(n, 0, 1);
        m.gen_element_[l[1]] = negated_swap(n, 0, 1);
        for (int k = 2; k < n; ++k) m.gen_element_[l[k]] = coord_swap(n, k - 1, k);
        break;
      case Family::I2:
        fac.dihedral = true;
        fac.points = c.type.m;
        m.gen_element_[l[0]] = {0, 1};
        m.gen_element_[l[1]] = {1, 1};
        break;
      default:
        return std::nullopt;
    }
    m.factors_.push_back(std::move(fac));
  }

  // Defining relations: every product of two generators has exactly the
  // order the diagram prescribes.
  const auto id = m.identity();
  auto order_of = [&](const FiniteModel::Element& x) {
    auto y = x;
    for (int k = 1; k <= 64; ++k) {
      if (y == id) return k;
      y = m.multiply(y, x);
    }
    return 0;
  };
  for (int s : t.members())
    for (int u : t.members()) {
      const int want = s == u ? 2 : d.order(s, u).value();
      const int got = order_of(s == u ? m.generator(s) : m.multiply(m.generator(s), m.generator(u)));
      if (got != want)
        throw InvariantError("model of " + d.name(s) + "," + d.name(u) + " has order " + std::to_string(got) +
                             ", diagram says " + std::to_string(want));
    }
  return m;
}

LongestElement longest_element(const FiniteModel& m) {
  LongestElement out;
  out.element = m.identity();
  for (std::size_t f = 0; f < m.factors().size(); ++f) {
    const auto& fac = m.factors()[f];
    const auto en = m.enumerate(f);
    const long long want = classical_order(fac.type);
    if (static_cast<long long>(en.elements.size()) != want)
      throw InvariantError(fac.type.to_string() + " model has " + std::to_string(en.elements.size()) +
                           " elements, expected " + std::to_string(want));
    const int top = *std::max_element(en.length.begin(), en.length.end());
    if (std::count(en.length.begin(), en.length.end(), top) != 1)
      throw InvariantError(fac.type.to_string() + " has no unique longest element");
    if (top != positive_roots(fac.type))
      throw InvariantError(fac.type.to_string() + " longest element has length " + std::to_string(top));
    const auto at = std::find(en.length.begin(), en.length.end(), top) - en.length.begin();
    out.element[f] = en.elements[at];
    out.length += top;
    out.group_order *= want;
  }
  return out;
}

std::vector<int> conjugate_generators(const CoxeterDiagram& d, const FiniteModel& m, const FiniteModel::Element& w) {
  std::vector<int> image(d.rank(), -1);
  const auto winv = m.inverse(w);
  const auto members = m.subset().members();
  for (int t : members) {
    const auto c = m.multiply(m.multiply(w, m.generator(t)), winv);
    for (int s : members)
      if (m.generator(s) == c) image[t] = s;
  }
  return image;
}

OmegaReport verify_omega(const CoxeterDiagram& d) {
  OmegaReport rep;
  for (const auto& sub : spherical_subsets(d)) {
    if (sub.set.empty()) continue;
    OmegaCheck chk{sub.set, OmegaCheck::Status::Pass, {}};
    try {
      auto model = build_model(d, sub.set);
      if (!model) {
        std::string types;
        for (const auto& c : *recognize(d, sub.set)) types += (types.empty() ? "" : " x ") + c.type.to_string();
        chk.status = OmegaCheck::Status::Skipped;
        chk.detail = "unsupported family: " + types;
      } else {
        const auto w = longest_element(*model);
        const auto got = conjugate_generators(d, *model, w.element);
        const auto want = longest_automorphism(d, sub.set);
        for (int s : sub.set.members())
          if (got[s] != want(s)) {
            chk.status = OmegaCheck::Status::Mismatch;
            chk.detail += d.name(s) + " -> " + (got[s] < 0 ? std::string("?") : d.name(got[s])) + " (table says " +
                          d.name(want(s)) + ") ";
          }
      }
    } catch (const InvariantError& e) {
      chk.status = OmegaCheck::Status::Mismatch;
      chk.detail = e.what();
    }
    switch (chk.status) {
      case OmegaCheck::Status::Pass: ++rep.passed; break;
      case OmegaCheck::Status::Mismatch: ++rep.mismatched; break;
      case OmegaCheck::Status::Skipped: ++rep.skipped; break;
    }
    rep.checks.push_back(std::move(chk));
  }
  return rep;
}

}  // namespace coxtwist
