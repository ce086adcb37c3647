#include "tnnlab/grouprep.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace tnnlab {

GroupToken GroupToken::inverse() const {
  switch (kind) {
    case Kind::X:
      return x(index, -t);
    case Kind::Y:
      return y(index, -t);
    case Kind::SDot:
      return sdot_inv(index);
    case Kind::SDotInv:
      return sdot(index);
    case Kind::Exp:
      return exp(scaled(Rational(-1), lie));
  }
  throw std::logic_error("unknown token kind");
}

GroupElement GroupElement::inverse() const {
  std::vector<GroupToken> inv;
  inv.reserve(word_.size());
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) inv.push_back(it->inverse());
  return GroupElement(std::move(inv));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  std::vector<GroupToken> w = a.word_;
  w.insert(w.end(), b.word_.begin(), b.word_.end());
  return GroupElement(std::move(w));
}

GroupElement parse_group_word(const std::string& text, int rank) {
  std::vector<GroupToken> word;
  std::string cleaned;
  for (char c : text) cleaned += (c == '*' ? ' ' : c);
  std::istringstream in(cleaned);
  std::string tok;
  auto node = [&](const std::string& digits, const std::string& whole) {
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(digits, &used);
      if (used != digits.size()) throw std::invalid_argument(whole);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator '" + whole + "'");
    }
    if (i < 1 || i > rank) throw std::invalid_argument("generator '" + whole + "' refers to a missing node");
    return i - 1;
  };
  while (in >> tok) {
    if (tok == "e" || tok == "1") continue;
    char head = static_cast<char>(std::tolower(static_cast<unsigned char>(tok[0])));
    if (head == 'x' || head == 'y') {
      auto open = tok.find('(');
      if (open == std::string::npos || tok.back() != ')') throw std::invalid_argument("bad generator '" + tok + "'");
      int i = node(tok.substr(1, open - 1), tok);
      Rational t = parse_rational(tok.substr(open + 1, tok.size() - open - 2));
      word.push_back(head == 'x' ? GroupToken::x(i, t) : GroupToken::y(i, t));
    } else if (head == 's') {
      std::string body = tok.substr(1);
      bool inv = false;
      if (auto caret = body.find("^-1"); caret != std::string::npos && caret + 3 == body.size()) {
        inv = true;
        body = body.substr(0, caret);
      }
      int i = node(body, tok);
      word.push_back(inv ? GroupToken::sdot_inv(i) : GroupToken::sdot(i));
    } else {
      throw std::invalid_argument("bad generator '" + tok + "'");
    }
  }
  return GroupElement(std::move(word));
}

std::string format_group_word(const GroupElement& g) {
  std::string out;
  for (const auto& tok : g.word()) {
    if (!out.empty()) out += ' ';
    switch (tok.kind) {
      case GroupToken::Kind::X:
        out += "x" + std::to_string(tok.index + 1) + "(" + to_string(tok.t) + ")";
        break;
      case GroupToken::Kind::Y:
        out += "y" + std::to_string(tok.index + 1) + "(" + to_string(tok.t) + ")";
        break;
      case GroupToken::Kind::SDot:
        out += "s" + std::to_string(tok.index + 1);
        break;
      case GroupToken::Kind::SDotInv:
        out += "s" + std::to_string(tok.index + 1) + "^-1";
        break;
      case GroupToken::Kind::Exp: {
        out += "exp[";
        for (std::size_t k = 0; k < tok.lie.size(); ++k) {
          if (k) out += ',';
          out += to_string(tok.lie[k]);
        }
        out += "]";
        break;
      }
    }
  }
  return out.empty() ? "e" : out;
}

GroupContext::GroupContext(RootDatum datum, int dimension_cap)
    : chevalley_(std::move(datum)), cap_(dimension_cap) {}

std::shared_ptr<const WeightModule> GroupContext::module(const std::string& id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (auto it = cache_.find(id); it != cache_.end()) return it->second;
  const int n = datum().rank();
  std::shared_ptr<const WeightModule> built;
  if (id == "adjoint") {
    if (chevalley_.dimension() > cap_) throw DimensionCapExceeded(chevalley_.dimension(), cap_);
    built = std::make_shared<const WeightModule>(adjoint_module(chevalley_));
  } else if (id.rfind("fund:", 0) == 0) {
    int i = 0;
    try {
      i = std::stoi(id.substr(5));
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown module id '" + id + "'");
    }
    if (i < 1 || i > n) throw std::invalid_argument("unknown module id '" + id + "'");
    IntVector w(n, 0);
    w[i - 1] = 1;
    built = std::make_shared<const WeightModule>(build_irreducible(datum(), w, cap_));
  } else if (id.rfind("hw:", 0) == 0) {
    RatVector coords;
    try {
      coords = parse_rational_list(id.substr(3));
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown module id '" + id + "'");
    }
    if (static_cast<int>(coords.size()) != n) throw std::invalid_argument("module id '" + id + "' has wrong rank");
    IntVector w;
    for (const auto& q : coords) {
      if (q.get_den() != 1 || q < 0) throw std::invalid_argument("module id '" + id + "' is not dominant integral");
      w.push_back(static_cast<int>(q.get_num().get_si()));
    }
    built = std::make_shared<const WeightModule>(build_irreducible(datum(), w, cap_));
  } else {
    throw std::invalid_argument("unknown module id '" + id + "'");
  }
  cache_.emplace(id, built);
  return built;
}

std::shared_ptr<const WeightModule> GroupContext::fundamental(int i) const {
  return module("fund:" + std::to_string(i + 1));
}

std::shared_ptr<const WeightModule> GroupContext::adjoint() const { return module("adjoint"); }

std::shared_ptr<const WeightModule> GroupContext::highest_weight(const IntVector& lambda) const {
  std::string id = "hw:";
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (k) id += ',';
    id += std::to_string(lambda[k]);
  }
  return module(id);
}

namespace {

// v <- exp(t N) v for nilpotent N given by a callback
template <typename Apply>
void exp_series(RatVector& v, const Rational& t, Apply apply_n, int dim) {
  if (sgn(t) == 0) return;
  RatVector term = v;
  for (int k = 1;; ++k) {
    term = apply_n(term);
    if (is_zero(term)) return;
    Rational c = t / k;
    for (auto& q : term) q *= c;
    for (std::size_t a = 0; a < v.size(); ++a) v[a] += term[a];
    if (k > dim) throw std::logic_error("exponential series did not terminate; element is not nilpotent");
  }
}

}  // namespace

void GroupContext::apply_token(const GroupToken& tok, const WeightModule& m, RatVector& v) const {
  const int dim = m.dimension();
  auto by_e = [&](int i) { return [&m, i](const RatVector& x) { return m.sparse_e(i).apply(x); }; };
  auto by_f = [&](int i) { return [&m, i](const RatVector& x) { return m.sparse_f(i).apply(x); }; };
  switch (tok.kind) {
    case GroupToken::Kind::X:
      exp_series(v, tok.t, by_e(tok.index), dim);
      return;
    case GroupToken::Kind::Y:
      exp_series(v, tok.t, by_f(tok.index), dim);
      return;
    case GroupToken::Kind::SDot:
      // y(1) x(-1) y(1), rightmost first
      exp_series(v, Rational(1), by_f(tok.index), dim);
      exp_series(v, Rational(-1), by_e(tok.index), dim);
      exp_series(v, Rational(1), by_f(tok.index), dim);
      return;
    case GroupToken::Kind::SDotInv:
      exp_series(v, Rational(-1), by_f(tok.index), dim);
      exp_series(v, Rational(1), by_e(tok.index), dim);
      exp_series(v, Rational(-1), by_f(tok.index), dim);
      return;
    case GroupToken::Kind::Exp: {
      const auto& cb = chevalley_;
      if (static_cast<int>(tok.lie.size()) != cb.dimension()) throw std::invalid_argument("Lie element has wrong length");
      std::vector<std::pair<int, Rational>> terms;
      for (int s = 0; s < cb.dimension(); ++s) {
        if (sgn(tok.lie[s]) == 0) continue;
        if (cb.label(s).kind != ChevalleyLabel::Kind::E) {
          throw std::invalid_argument("exp token needs an element of the positive nilradical");
        }
        terms.emplace_back(cb.label(s).index, tok.lie[s]);
      }
      auto apply_u = [&](const RatVector& x) {
        RatVector out(x.size());
        for (const auto& [root, coef] : terms) {
          RatVector y = m.sparse_root_e(root).apply(x);
          for (std::size_t a = 0; a < out.size(); ++a)
            if (sgn(y[a]) != 0) out[a] += coef * y[a];
        }
        return out;
      };
      exp_series(v, Rational(1), apply_u, dim);
      return;
    }
  }
}

RatVector GroupContext::apply(const GroupElement& g, const WeightModule& m, RatVector v) const {
  if (static_cast<int>(v.size()) != m.dimension()) throw std::invalid_argument("vector length does not match module");
  for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) {
    if (it->kind != GroupToken::Kind::Exp && (it->index < 0 || it->index >= datum().rank())) {
      throw std::invalid_argument("generator index out of range");
    }
    apply_token(*it, m, v);
  }
  return v;
}

RatMatrix GroupContext::matrix(const GroupElement& g, const WeightModule& m) const {
  const int dim = m.dimension();
  RatMatrix out(dim, dim);
  for (int c = 0; c < dim; ++c) {
    RatVector e(dim);
    e[c] = 1;
    RatVector col = apply(g, m, std::move(e));
    for (int r = 0; r < dim; ++r) out(r, c) = col[r];
  }
  return out;
}

RatMatrix GroupContext::matrix(const GroupElement& g, const std::string& module_id) const {
  return matrix(g, *module(module_id));
}

GroupElement gen(const GroupToken& tok) { return GroupElement({tok}); }

GroupElement wdot(const WeylElement& w) {
  std::vector<GroupToken> word;
  for (int i : w.word()) word.push_back(GroupToken::sdot(i));
  return GroupElement(std::move(word));
}

Rational delta_varpi(const GroupContext& ctx, int i, const GroupElement& g) {
  auto m = ctx.fundamental(i);
  RatVector v(m->dimension());
  v[m->highest_index()] = 1;
  return ctx.apply(g, *m, std::move(v))[m->highest_index()];
}

Rational delta_adjoint_type(const GroupContext& ctx, int i, const GroupElement& g) {
  const auto& d = ctx.datum();
  IntVector lambda(d.rank(), 0);
  lambda[i] = d.fundamental_exponents()[i];
  auto m = ctx.highest_weight(lambda);
  RatVector v(m->dimension());
  v[m->highest_index()] = 1;
  RatVector lowest = ctx.apply(wdot(d.longest_element(d.all_nodes())).inverse(), *m, v);
  RatVector gv = ctx.apply(g, *m, v);
  return dot(gv, m->gram() * lowest);
}

RatVector ad_inverse(const GroupContext& ctx, const GroupElement& g, const RatVector& x) {
  return ctx.apply(g.inverse(), *ctx.adjoint(), x);
}

Rational ad_coefficient(const GroupContext& ctx, const GroupElement& g, int slot) {
  const auto& cb = ctx.chevalley();
  return ad_inverse(ctx, g, cb.regular_nilpotent(ctx.datum().all_nodes()))[slot];
}

Rational q_value(const GroupContext& ctx, int i, const GroupElement& g) {
  return -ad_coefficient(ctx, g, ctx.chevalley().f_slot(i));
}

TnnSample tnn_sample(const WeylElement& w, const RatVector& params) {
  if (static_cast<int>(params.size()) != w.length()) {
    throw std::invalid_argument("need one parameter per letter of the reduced word");
  }
  std::vector<GroupToken> word;
  for (int k = 0; k < w.length(); ++k) {
    if (sgn(params[k]) <= 0) throw std::invalid_argument("TNN parameters must be positive");
    word.push_back(GroupToken::x(w.word()[k], params[k]));
  }
  return TnnSample{w, params, GroupElement(std::move(word))};
}

TnnSample tnn_sample(const WeylElement& w, std::mt19937_64& rng) {
  RatVector params;
  for (int k = 0; k < w.length(); ++k) params.push_back(random_positive_rational(rng, 9, 4));
  return tnn_sample(w, params);
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

Rational min_minor(const RatMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("min_minor needs a nonempty square matrix");
  const int n = static_cast<int>(m.rows());
  Rational best = m(0, 0);
  for (int k = 1; k <= n; ++k) {
    auto subsets = subsets_of_size(n, k);
    for (const auto& rows : subsets)
      for (const auto& cols : subsets) {
        RatMatrix sub(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub(a, b) = m(rows[a], cols[b]);
        Rational det = determinant(sub);
        if (det < best) best = det;
      }
  }
  return best;
}

long double min_minor(const std::vector<std::vector<long double>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("min_minor needs a nonempty square matrix");
  long double best = m[0][0];
  for (int k = 1; k <= n; ++k) {
    auto subsets = subsets_of_size(n, k);
    for (const auto& rows : subsets)
      for (const auto& cols : subsets) {
        std::vector<std::vector<long double>> a(k, std::vector<long double>(k));
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c) a[r][c] = m[rows[r]][cols[c]];
        // Gaussian elimination with partial pivoting
        long double det = 1;
        for (int c = 0; c < k; ++c) {
          int piv = c;
          for (int r = c + 1; r < k; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
          if (a[piv][c] == 0) {
            det = 0;
            break;
          }
          if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
          }
          det *= a[c][c];
          for (int r = c + 1; r < k; ++r) {
            long double f = a[r][c] / a[c][c];
            for (int cc = c; cc < k; ++cc) a[r][cc] -= f * a[c][cc];
          }
        }
        best = std::min(best, det);
      }
  }
  return best;
}

bool tnn_membership_typeA(const RatMatrix& u) {
  if (!u.is_square()) throw std::invalid_argument("expected a square matrix");
  for (std::size_t r = 0; r < u.rows(); ++r)
    for (std::size_t c = 0; c <= r; ++c)
      if (u(r, c) != (r == c ? 1 : 0)) throw std::invalid_argument("expected an upper unitriangular matrix");
  return min_minor(u) >= 0;
}

namespace {

std::vector<NodeSet> components_within(const RootDatum& d, NodeSet J) {
  std::vector<NodeSet> out;
  NodeSet seen = 0;
  for (int start : members(J)) {
    if (contains(seen, start)) continue;
    NodeSet comp = with(0, start);
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j : members(J))
        if (j != i && d.cartan()(i, j) != 0 && !contains(comp, j)) {
          comp = with(comp, j);
          queue.push_back(j);
        }
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

}  // namespace

std::vector<RatVector> centralizer_basis(const ChevalleyBasis& cb, NodeSet J) {
  const auto& d = cb.datum();
  std::vector<RatVector> out;
  RatVector eJ = cb.regular_nilpotent(J);
  for (NodeSet comp : components_within(d, J)) {
    auto roots = d.roots_supported_on(comp);
    int top = 0;
    for (int r : roots) top = std::max(top, d.height(r));
    for (int h = 1; h <= top; ++h) {
      std::vector<int> source;
      for (int r : roots)
        if (d.height(r) == h) source.push_back(r);
      if (source.empty()) continue;
      RatMatrix map(cb.dimension(), source.size());
      for (std::size_t c = 0; c < source.size(); ++c) {
        RatVector image = cb.bracket(cb.basis_vector(cb.e_slot(source[c])), eJ);
        for (int s = 0; s < cb.dimension(); ++s) map(s, c) = image[s];
      }
      for (auto& k : nullspace(map)) {
        RatVector p = primitive(k);
        auto first = std::find_if(p.begin(), p.end(), [](const Rational& q) { return sgn(q) != 0; });
        if (*first < 0)
          for (auto& q : p) q = -q;
        RatVector x(cb.dimension());
        for (std::size_t c = 0; c < source.size(); ++c) x[cb.e_slot(source[c])] = p[c];
        out.push_back(std::move(x));
      }
    }
  }
  return out;
}

int lie_height(const ChevalleyBasis& cb, const RatVector& x) {
  for (int s = 0; s < cb.dimension(); ++s) {
    if (sgn(x[s]) == 0) continue;
    if (cb.label(s).kind != ChevalleyLabel::Kind::E) throw std::invalid_argument("element is not in the nilradical");
    return cb.datum().height(cb.label(s).index);
  }
  return 0;
}

GroupElement restrict_to_levi(const ChevalleyBasis& cb, const GroupElement& g, NodeSet J,
                              const ChevalleyBasis& levi) {
  auto idx = members(J);
  if (static_cast<int>(idx.size()) != levi.datum().rank()) throw std::invalid_argument("Levi datum rank mismatch");
  auto local = [&](int i) {
    auto it = std::find(idx.begin(), idx.end(), i);
    if (it == idx.end()) throw std::invalid_argument("word leaves the Levi subgroup");
    return static_cast<int>(it - idx.begin());
  };
  std::vector<GroupToken> word;
  for (const auto& tok : g.word()) {
    if (tok.kind != GroupToken::Kind::Exp) {
      GroupToken t = tok;
      t.index = local(tok.index);
      word.push_back(std::move(t));
      continue;
    }
    RatVector lie(levi.dimension());
    for (int s = 0; s < cb.dimension(); ++s) {
      if (sgn(tok.lie[s]) == 0) continue;
      if (cb.label(s).kind != ChevalleyLabel::Kind::E) throw std::invalid_argument("exp token outside the nilradical");
      const auto& beta = cb.datum().positive_roots()[cb.label(s).index];
      IntVector sub(idx.size());
      for (int k = 0; k < cb.datum().rank(); ++k) {
        if (beta[k] == 0) continue;
        sub[local(k)] = beta[k];
      }
      auto r = levi.datum().root_index(sub);
      if (!r) throw std::logic_error("restricted root missing from the Levi datum");
      lie[levi.e_slot(*r)] = tok.lie[s];
    }
    word.push_back(GroupToken::exp(std::move(lie)));
  }
  return GroupElement(std::move(word));
}

}  // namespace tnnlab
