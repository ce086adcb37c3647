#include "tnnlab/rootdata.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tnnlab {

int popcount(NodeSet s) { return std::popcount(s); }

std::vector<int> members(NodeSet s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1U) out.push_back(i);
  return out;
}

NodeSet node_set(const std::vector<int>& zero_based) {
  NodeSet s = 0;
  for (int i : zero_based) s = with(s, i);
  return s;
}

std::string format_nodes(NodeSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : members(s)) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

NodeSet parse_nodes(const std::string& text, int n) {
  NodeSet s = 0;
  std::string cleaned;
  for (char c : text)
    if (c != '{' && c != '}' && c != ' ') cleaned += c;
  if (cleaned.empty() || cleaned == "-") return 0;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int label = 0;
    try {
      std::size_t used = 0;
      label = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad node label '" + item + "'");
    }
    if (label < 1 || label > n) {
      throw std::invalid_argument("node label " + std::to_string(label) + " outside 1.." + std::to_string(n));
    }
    s = with(s, label - 1);
  }
  return s;
}

std::vector<NodeSet> all_subsets(int n) {
  std::vector<NodeSet> out;
  for (NodeSet s = 0; s <= full_set(n); ++s) out.push_back(s);
  return out;
}

CartanMatrix::CartanMatrix(std::string name, std::vector<IntVector> entries)
    : name_(std::move(name)), entries_(std::move(entries)) {
  const auto n = entries_.size();
  if (n == 0) throw std::invalid_argument("Cartan matrix must have positive rank");
  if (n > static_cast<std::size_t>(kMaxRank)) throw std::invalid_argument("Cartan matrix rank exceeds 16");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw std::invalid_argument("Cartan matrix must be square");
    if (entries_[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal entries must be 2");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries_[i][j] > 0) throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
      if ((entries_[i][j] == 0) != (entries_[j][i] == 0)) {
        throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
      }
    }
  }
  if (determinant(to_rational()) == 0) throw std::invalid_argument("Cartan matrix is singular");
}

CartanMatrix CartanMatrix::restrict_to(NodeSet J, std::string name) const {
  auto idx = members(J);
  std::vector<IntVector> sub(idx.size(), IntVector(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = entries_[idx[a]][idx[b]];
  return CartanMatrix(std::move(name), std::move(sub));
}

CartanMatrix direct_sum(const CartanMatrix& a, const CartanMatrix& b) {
  const int n = a.rank() + b.rank();
  std::vector<IntVector> e(n, IntVector(n, 0));
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) e[i][j] = a(i, j);
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) e[a.rank() + i][a.rank() + j] = b(i, j);
  return CartanMatrix(a.name() + "x" + b.name(), std::move(e));
}

IntVector WeylElement::apply(const IntVector& beta) const {
  IntVector out(rank_, 0);
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) out[r] += action_[r * rank_ + c] * beta[c];
  return out;
}

bool is_positive(const IntVector& beta) {
  bool nonzero = false;
  for (int b : beta) {
    if (b < 0) return false;
    nonzero = nonzero || b != 0;
  }
  return nonzero;
}

bool is_negative(const IntVector& beta) {
  bool nonzero = false;
  for (int b : beta) {
    if (b > 0) return false;
    nonzero = nonzero || b != 0;
  }
  return nonzero;
}

namespace {

constexpr int kHeightBound = 100;
constexpr std::size_t kRootCountBound = 20000;

int pair_root_simple_coroot(const CartanMatrix& c, const IntVector& beta, int i) {
  int s = 0;
  for (int k = 0; k < c.rank(); ++k) s += beta[k] * c(k, i);
  return s;
}

}  // namespace

RootDatum::RootDatum(CartanMatrix cartan) : cartan_(std::move(cartan)) {
  const int n = rank();

  // symmetrizer by propagation along the Dynkin graph
  std::vector<std::optional<Rational>> d(n);
  for (int start = 0; start < n; ++start) {
    if (d[start]) continue;
    d[start] = Rational(1);
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan_(i, j) == 0) continue;
        Rational dj = Rational(cartan_(j, i)) * *d[i] / Rational(cartan_(i, j));
        if (!d[j]) {
          d[j] = dj;
          queue.push_back(j);
        } else if (*d[j] != dj) {
          throw std::invalid_argument("Cartan matrix " + name() + " is not symmetrizable");
        }
      }
    }
  }
  for (auto& v : d) symmetrizer_.push_back(*v);

  // closure of the simple roots under root strings, height by height
  std::set<IntVector> known;
  std::vector<IntVector> level;
  for (int i = 0; i < n; ++i) {
    IntVector a(n, 0);
    a[i] = 1;
    level.push_back(a);
    known.insert(a);
  }
  std::vector<std::vector<IntVector>> levels;
  int h = 1;
  while (!level.empty()) {
    if (h > kHeightBound || known.size() > kRootCountBound) {
      throw std::invalid_argument("root closure of " + name() + " did not stabilize by height " +
                                  std::to_string(kHeightBound) + "; not of finite type");
    }
    std::set<IntVector> next;
    for (const auto& beta : level) {
      for (int i = 0; i < n; ++i) {
        IntVector down = beta;
        int p = 0;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int q = p - pair_root_simple_coroot(cartan_, beta, i);
        if (q > 0) {
          IntVector up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    levels.push_back(level);
    level.assign(next.begin(), next.end());
    for (const auto& b : level) known.insert(b);
    ++h;
  }
  for (std::size_t lh = 0; lh < levels.size(); ++lh) {
    auto lv = levels[lh];
    std::sort(lv.begin(), lv.end(), std::greater<>());
    for (auto& b : lv) {
      index_[b] = static_cast<int>(roots_.size());
      roots_.push_back(std::move(b));
      heights_.push_back(static_cast<int>(lh) + 1);
    }
  }

  // coroots: beta^vee = sum_k beta_k (d_k / d_beta) alpha_k^vee with d_beta = (beta,beta)/2
  for (const auto& beta : roots_) {
    Rational dbeta = 0;
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) dbeta += Rational(beta[k] * beta[l] * cartan_(k, l)) * symmetrizer_[l];
    dbeta /= 2;
    IntVector cv(n);
    for (int k = 0; k < n; ++k) {
      Rational coef = Rational(beta[k]) * symmetrizer_[k] / dbeta;
      if (coef.get_den() != 1) throw std::logic_error("non-integral coroot coefficient");
      cv[k] = static_cast<int>(coef.get_num().get_si());
    }
    coroots_.push_back(std::move(cv));
  }

  cartan_inverse_ = inverse(cartan_.to_rational());
}

std::optional<int> RootDatum::root_index(const IntVector& beta) const {
  auto it = index_.find(beta);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> RootDatum::roots_supported_on(NodeSet J) const {
  std::vector<int> out;
  for (int r = 0; r < num_positive_roots(); ++r)
    if (is_subset(support(r), J)) out.push_back(r);
  return out;
}

NodeSet RootDatum::support(int root) const {
  NodeSet s = 0;
  for (int k = 0; k < rank(); ++k)
    if (roots_[root][k] != 0) s = with(s, k);
  return s;
}

IntVector RootDatum::simple_root_weight(int i) const { return cartan_.entries()[i]; }

IntVector RootDatum::simple_coroot_coweight(int i) const {
  IntVector out(rank());
  for (int r = 0; r < rank(); ++r) out[r] = cartan_(r, i);
  return out;
}

IntVector RootDatum::root_weight(const IntVector& beta) const {
  IntVector out(rank(), 0);
  for (int k = 0; k < rank(); ++k)
    for (int j = 0; j < rank(); ++j) out[j] += beta[k] * cartan_(k, j);
  return out;
}

Rational RootDatum::pair_weight_coroot(const RatVector& lambda, int root) const {
  Rational s = 0;
  for (int k = 0; k < rank(); ++k) s += lambda[k] * coroots_[root][k];
  return s;
}

Rational RootDatum::pair_weight_coweight(const RatVector& lambda, int j) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) s += lambda[i] * cartan_inverse_(i, j);
  return s;
}

RatVector RootDatum::weight_to_root_coords(const RatVector& lambda) const {
  RatVector out(rank());
  for (int i = 0; i < rank(); ++i)
    for (int k = 0; k < rank(); ++k) out[k] += lambda[i] * cartan_inverse_(i, k);
  return out;
}

RatVector RootDatum::root_coords_to_weight(const RatVector& beta) const {
  RatVector out(rank());
  for (int k = 0; k < rank(); ++k)
    for (int j = 0; j < rank(); ++j) out[j] += beta[k] * cartan_(k, j);
  return out;
}

IntVector RootDatum::fundamental_exponents() const {
  IntVector m(rank());
  for (int i = 0; i < rank(); ++i) {
    m[i] = static_cast<int>(lcm_of_denominators(cartan_inverse_.row(i)).get_num().get_si());
  }
  return m;
}

Rational RootDatum::cartan_determinant() const { return determinant(cartan_.to_rational()); }

std::vector<NodeSet> RootDatum::dynkin_components() const {
  std::vector<NodeSet> out;
  NodeSet seen = 0;
  for (int start = 0; start < rank(); ++start) {
    if (contains(seen, start)) continue;
    NodeSet comp = with(0, start);
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < rank(); ++j) {
        if (j != i && cartan_(i, j) != 0 && !contains(comp, j)) {
          comp = with(comp, j);
          queue.push_back(j);
        }
      }
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

WeylElement RootDatum::identity() const {
  WeylElement w;
  w.rank_ = rank();
  w.action_.assign(rank() * rank(), 0);
  for (int i = 0; i < rank(); ++i) w.action_[i * rank() + i] = 1;
  return w;
}

WeylElement RootDatum::times_simple(const WeylElement& w, int i) const {
  const int n = rank();
  if (i < 0 || i >= n) throw std::out_of_range("simple reflection index out of range");
  WeylElement out = w;
  // (w s_i)(alpha_j) = w(alpha_j) - c[j][i] w(alpha_i)
  for (int j = 0; j < n; ++j) {
    int cji = cartan_(j, i);
    if (j == i) {
      for (int r = 0; r < n; ++r) out.action_[r * n + i] = -w.action_[r * n + i];
    } else if (cji != 0) {
      for (int r = 0; r < n; ++r) out.action_[r * n + j] = w.action_[r * n + j] - cji * w.action_[r * n + i];
    }
  }
  if (is_right_descent(w, i)) {
    // shortening: recover a reduced word from scratch
    out.word_.clear();
    auto words = reduced_words(out, 1);
    out.word_ = words.front();
  } else {
    out.word_.push_back(i);
  }
  return out;
}

WeylElement RootDatum::from_word(const IntVector& word) const {
  WeylElement w = identity();
  for (int i : word) w = times_simple(w, i);
  return w;
}

WeylElement RootDatum::longest_element(NodeSet J) const {
  WeylElement w = identity();
  while (true) {
    bool extended = false;
    for (int i : members(J)) {
      if (!is_right_descent(w, i)) {
        w = times_simple(w, i);
        extended = true;
        break;
      }
    }
    if (!extended) return w;
  }
}

IntVector RootDatum::involution_star() const {
  WeylElement w0 = longest_element(all_nodes());
  IntVector star(rank(), -1);
  for (int i = 0; i < rank(); ++i) {
    IntVector a(rank(), 0);
    a[i] = 1;
    IntVector image = w0.apply(a);
    for (int j = 0; j < rank(); ++j) {
      IntVector target(rank(), 0);
      target[j] = -1;
      if (image == target) star[i] = j;
    }
    if (star[i] < 0) throw std::logic_error("w0 does not send a simple root to a negative simple root");
  }
  return star;
}

int RootDatum::inversion_count(const WeylElement& w) const {
  int count = 0;
  for (const auto& beta : roots_)
    if (is_negative(w.apply(beta))) ++count;
  return count;
}

bool RootDatum::is_right_descent(const WeylElement& w, int i) const {
  const int n = rank();
  for (int r = 0; r < n; ++r) {
    int v = w.action_[r * n + i];
    if (v != 0) return v < 0;
  }
  return false;
}

std::vector<IntVector> RootDatum::reduced_words(const WeylElement& w, std::size_t cap) const {
  std::vector<IntVector> out;
  // depth-first over right descents; each path peels one letter off the right end
  struct Frame {
    WeylElement elem;
    IntVector suffix;
  };
  std::vector<Frame> stack{{w, {}}};
  while (!stack.empty() && out.size() < cap) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.elem.action_ == identity().action_) {
      IntVector word(f.suffix.rbegin(), f.suffix.rend());
      out.push_back(std::move(word));
      continue;
    }
    for (int i = rank() - 1; i >= 0; --i) {
      if (!is_right_descent(f.elem, i)) continue;
      Frame next{f.elem, f.suffix};
      // multiply by s_i without word bookkeeping
      const int n = rank();
      for (int j = 0; j < n; ++j) {
        int cji = cartan_(j, i);
        if (j == i) {
          for (int r = 0; r < n; ++r) next.elem.action_[r * n + i] = -f.elem.action_[r * n + i];
        } else if (cji != 0) {
          for (int r = 0; r < n; ++r)
            next.elem.action_[r * n + j] = f.elem.action_[r * n + j] - cji * f.elem.action_[r * n + i];
        }
      }
      next.suffix.push_back(i);
      stack.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<WeylElement> RootDatum::weyl_group(std::size_t cap) const {
  std::vector<WeylElement> out{identity()};
  std::set<IntVector> seen{out.front().action_};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < rank(); ++i) {
      if (is_right_descent(out[head], i)) continue;
      WeylElement next = times_simple(out[head], i);
      if (seen.insert(next.action_).second) {
        if (out.size() >= cap) throw std::length_error("Weyl group of " + name() + " exceeds enumeration cap");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

RatVector RootDatum::reflect_weight(const RatVector& lambda, int i) const {
  RatVector out = lambda;
  if (sgn(lambda[i]) == 0) return out;
  for (int j = 0; j < rank(); ++j) out[j] -= lambda[i] * cartan_(i, j);
  return out;
}

RatVector RootDatum::act_on_weight(const WeylElement& w, const RatVector& lambda) const {
  RatVector out = lambda;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) out = reflect_weight(out, *it);
  return out;
}

}  // namespace tnnlab
