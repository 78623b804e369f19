// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfan/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace rfan {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  if (generators_.empty()) throw std::invalid_argument("ideal needs at least one generator");
  for (const auto& g : generators_) {
    if (g.is_zero()) throw std::invalid_argument("ideal generator is zero");
    if (g.nvars() != ring_.size()) throw std::invalid_argument("generator lives in a different ring");
  }
}

MarkedReducedGB::MarkedReducedGB(std::vector<MarkedPolynomial> elements) : elements_(std::move(elements)) {
  for (const auto& e : elements_) {
    if (e.polynomial.coefficient(e.mark) != 1) throw std::invalid_argument("basis element not monic at mark");
  }
  std::sort(elements_.begin(), elements_.end(), [](const MarkedPolynomial& a, const MarkedPolynomial& b) {
    if (auto c = a.mark <=> b.mark; c != 0) return c < 0;
    return canonical_compare(a.polynomial, b.polynomial) < 0;
  });
  std::ostringstream out;
  for (const auto& e : elements_) {
    for (std::size_t i = 0; i < e.mark.size(); ++i) out << (i ? "," : "") << e.mark[i];
    out << ':';
    for (const auto& t : e.polynomial.terms()) {
      out << to_string(t.coefficient) << '@';
      for (std::size_t i = 0; i < t.exponent.size(); ++i) out << (i ? "," : "") << t.exponent[i];
      out << ';';
    }
    out << '|';
  }
  key_ = out.str();
}

std::size_t MarkedReducedGB::nvars() const {
  return elements_.empty() ? 0 : elements_.front().polynomial.nvars();
}

std::vector<Polynomial> MarkedReducedGB::polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& e : elements_) out.push_back(e.polynomial);
  return out;
}

std::vector<ExponentVector> MarkedReducedGB::marks() const {
  std::vector<ExponentVector> out;
  for (const auto& e : elements_) out.push_back(e.mark);
  return out;
}

bool MarkedReducedGB::is_reduced() const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& mi = elements_[i].mark;
    if (elements_[i].polynomial.coefficient(mi) != 1) return false;
    for (std::size_t j = 0; j < elements_.size(); ++j) {
      for (const auto& t : elements_[j].polynomial.terms()) {
        if (i == j && t.exponent == mi) continue;
        if (mi.divides(t.exponent)) return false;
      }
    }
  }
  return true;
}

namespace {

// Terms sorted ascending under the active order, so the initial term is back().
using Work = std::vector<Term>;

class Engine {
 public:
  Engine(const TermOrder& order, const BuchbergerOptions& options)
      : order_(order), options_(options), term_order_(check_term_order(order, order.nvars())) {}

  Work to_work(const Polynomial& p) const {
    Work w = p.terms();
    sort(w);
    return w;
  }

  void sort(Work& w) const {
    std::sort(w.begin(), w.end(),
              [this](const Term& a, const Term& b) { return order_.compare(a.exponent, b.exponent) < 0; });
  }

  // p - c * x^m * g, where g is sorted ascending.
  Work sub_mul(const Work& p, const Rational& c, const ExponentVector& m, const Work& g) const {
    Work scaled;
    scaled.reserve(g.size());
    for (const auto& t : g) scaled.push_back({-c * t.coefficient, t.exponent + m});
    // Multiplication by a monomial preserves a term order but not an arbitrary one.
    if (!term_order_) sort(scaled);
    Work out;
    out.reserve(p.size() + scaled.size());
    auto i = p.begin();
    auto j = scaled.begin();
    while (i != p.end() && j != scaled.end()) {
      auto cmp = order_.compare(i->exponent, j->exponent);
      if (cmp < 0) {
        out.push_back(*i++);
      } else if (cmp > 0) {
        out.push_back(std::move(*j++));
      } else {
        Rational s = i->coefficient + j->coefficient;
        if (s != 0) out.push_back({std::move(s), i->exponent});
        ++i;
        ++j;
      }
    }
    out.insert(out.end(), i, p.end());
    for (; j != scaled.end(); ++j) out.push_back(std::move(*j));
    return out;
  }

  // Full reduction; the result is sorted ascending.
  Work reduce(Work p, const std::vector<const Work*>& basis) {
    Work remainder;
    while (!p.empty()) {
      const Term lead = p.back();
      const Work* divisor = nullptr;
      for (const Work* g : basis) {
        if (g->back().exponent.divides(lead.exponent)) {
          divisor = g;
          break;
        }
      }
      if (divisor == nullptr) {
        remainder.push_back(lead);
        p.pop_back();
        continue;
      }
      if (++steps_ > options_.max_reduction_steps) {
        throw NonTermination("reduction step limit exceeded; the order is probably not a term order");
      }
      p = sub_mul(p, lead.coefficient, lead.exponent - divisor->back().exponent, *divisor);
    }
    std::reverse(remainder.begin(), remainder.end());
    if (!term_order_) sort(remainder);
    return remainder;
  }

  static void make_monic(Work& w) {
    Rational inv = 1 / w.back().coefficient;
    for (auto& t : w) t.coefficient *= inv;
  }

  Work spoly(const Work& f, const Work& g) const {
    const auto& a = f.back().exponent;
    const auto& b = g.back().exponent;
    auto l = a.lcm(b);
    Work scaled;
    scaled.reserve(f.size());
    auto ma = l - a;
    for (const auto& t : f) scaled.push_back({t.coefficient, t.exponent + ma});
    if (!term_order_) sort(scaled);
    return sub_mul(scaled, Rational(1), l - b, g);
  }

  MarkedReducedGB run(std::span<const Polynomial> generators) {
    std::vector<Work> basis;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add = [&](Work w) {
      make_monic(w);
      std::size_t k = basis.size();
      basis.push_back(std::move(w));
      for (std::size_t i = 0; i < k; ++i) pending.insert({i, k});
    };
    for (const auto& g : generators) {
      if (!g.is_zero()) add(to_work(g));
    }
    if (basis.empty()) throw std::invalid_argument("buchberger: all generators are zero");

    std::size_t pairs = 0;
    while (!pending.empty()) {
      // Normal strategy: smallest lcm first, ties by index.
      auto best = pending.begin();
      ExponentVector best_lcm = basis[best->first].back().exponent.lcm(basis[best->second].back().exponent);
      for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
        auto l = basis[it->first].back().exponent.lcm(basis[it->second].back().exponent);
        if (order_.compare(l, best_lcm) < 0) {
          best = it;
          best_lcm = std::move(l);
        }
      }
      auto [i, j] = *best;
      pending.erase(best);
      if (++pairs > options_.max_pairs) {
        throw NonTermination("S-pair limit exceeded after " + std::to_string(options_.max_pairs) +
                             " pairs; basis size " + std::to_string(basis.size()));
      }
      const auto& li = basis[i].back().exponent;
      const auto& lj = basis[j].back().exponent;
      if (li.coprime(lj)) continue;
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == i || k == j) continue;
        if (!basis[k].back().exponent.divides(best_lcm)) continue;
        auto pik = std::minmax(i, k);
        auto pjk = std::minmax(j, k);
        chain = !pending.contains({pik.first, pik.second}) && !pending.contains({pjk.first, pjk.second});
      }
      if (chain) continue;
      std::vector<const Work*> view;
      view.reserve(basis.size());
      for (const auto& b : basis) view.push_back(&b);
      Work r = reduce(spoly(basis[i], basis[j]), view);
      if (!r.empty()) add(std::move(r));
    }
    return finish(basis);
  }

  MarkedReducedGB finish(const std::vector<Work>& basis) {
    // Minimal basis: drop elements whose initial monomial is divisible by another's.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& li = basis[i].back().exponent;
      bool redundant = false;
      for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j) continue;
        const auto& lj = basis[j].back().exponent;
        if (lj.divides(li) && (lj != li || j < i)) redundant = true;
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<MarkedPolynomial> out;
    for (std::size_t i : keep) {
      std::vector<const Work*> others;
      for (std::size_t j : keep) {
        if (j != i) others.push_back(&basis[j]);
      }
      Work r = reduce(basis[i], others);
      const std::size_t n = order_.nvars();
      auto mark = r.back().exponent;
      out.push_back({std::move(mark), Polynomial(n, std::move(r))});
    }
    return MarkedReducedGB(std::move(out));
  }

 private:
  const TermOrder& order_;
  BuchbergerOptions options_;
  bool term_order_;
  std::size_t steps_ = 0;
};

std::vector<MarkedPolynomial> as_marked(const MarkedReducedGB& gb) { return gb.elements(); }

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const MarkedPolynomial> basis, const TermOrder& order,
                       const BuchbergerOptions& options) {
  Engine engine(order, options);
  std::vector<Work> works;
  works.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.polynomial.coefficient(g.mark) != 1) throw std::invalid_argument("normal_form: basis not monic at mark");
    Work w = engine.to_work(g.polynomial);
    if (w.back().exponent != g.mark) {
      throw std::invalid_argument("normal_form: mark is not the initial exponent under the given order");
    }
    works.push_back(std::move(w));
  }
  std::vector<const Work*> view;
  for (const auto& w : works) view.push_back(&w);
  if (f.is_zero()) return f;
  return Polynomial(f.nvars(), engine.reduce(engine.to_work(f), view));
}

Polynomial normal_form(const Polynomial& f, std::span<const MarkedPolynomial> basis,
                       const BuchbergerOptions& options) {
  for (const auto& g : basis) {
    if (g.polynomial.coefficient(g.mark) != 1) throw std::invalid_argument("normal_form: basis not monic at mark");
  }
  Polynomial p = f;
  Polynomial remainder(f.nvars());
  std::size_t steps = 0;
  while (!p.is_zero()) {
    bool reduced = false;
    for (const auto& t : p.terms()) {
      for (const auto& g : basis) {
        if (!g.mark.divides(t.exponent)) continue;
        if (++steps > options.max_reduction_steps) {
          throw NonTermination("reduction step limit exceeded; marking not induced by a term order");
        }
        p = p - g.polynomial.mul_term(t.coefficient, t.exponent - g.mark);
        reduced = true;
        break;
      }
      if (reduced) break;
    }
    if (!reduced) {
      remainder = remainder + p;
      break;
    }
  }
  return remainder;
}

Polynomial s_polynomial(const MarkedPolynomial& f, const MarkedPolynomial& g) {
  auto l = f.mark.lcm(g.mark);
  Rational cf = f.polynomial.coefficient(f.mark);
  Rational cg = g.polynomial.coefficient(g.mark);
  return f.polynomial.mul_term(1 / cf, l - f.mark) - g.polynomial.mul_term(1 / cg, l - g.mark);
}

MarkedReducedGB buchberger(std::span<const Polynomial> generators, const TermOrder& order,
                           const BuchbergerOptions& options) {
  for (const auto& g : generators) {
    if (g.nvars() != order.nvars()) throw std::invalid_argument("buchberger: order/ring dimension mismatch");
  }
  Engine engine(order, options);
  return engine.run(generators);
}

MarkedReducedGB buchberger(const Ideal& ideal, const TermOrder& order, const BuchbergerOptions& options) {
  return buchberger(std::span<const Polynomial>(ideal.generators()), order, options);
}

MarkedReducedGB gb_for_weight(const Ideal& ideal, std::span<const Rational> w, const TermOrder& tiebreak,
                              const BuchbergerOptions& options) {
  if (w.size() != ideal.nvars()) throw std::invalid_argument("gb_for_weight: dimension mismatch");
  for (const auto& x : w) {
    if (x <= 0) throw std::invalid_argument("gb_for_weight: weight must be strictly positive");
  }
  return buchberger(ideal, tiebreak.refined_by(w), options);
}

MarkedReducedGB gb_for_weight(const Ideal& ideal, std::span<const Integer> w, const TermOrder& tiebreak,
                              const BuchbergerOptions& options) {
  RatVector r = to_rational(w);
  return gb_for_weight(ideal, std::span<const Rational>(r), tiebreak, options);
}

Ideal initial_ideal(const MarkedReducedGB& gb, const Ring& ring) {
  std::vector<Polynomial> gens;
  for (const auto& e : gb.elements()) gens.push_back(Polynomial::monomial(e.mark));
  return Ideal(ring, std::move(gens));
}

std::vector<Polynomial> initial_forms_ideal(const Ideal& ideal, std::span<const Rational> w,
                                            const TermOrder& tiebreak) {
  auto gb = gb_for_weight(ideal, w, tiebreak);
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements()) out.push_back(initial_form(w, e.polynomial));
  return out;
}

Ideal homogenize(const Ideal& ideal, const TermOrder& order, std::string variable) {
  const std::size_t n = ideal.nvars();
  RatVector ones(n, Rational(1));
  auto gb = buchberger(ideal, order.refined_by(std::span<const Rational>(ones)));
  std::vector<Polynomial> gens;
  for (const auto& e : gb.elements()) {
    const auto d = e.polynomial.total_degree();
    std::vector<Term> terms;
    for (const auto& t : e.polynomial.terms()) {
      ExponentVector x(n + 1);
      for (std::size_t i = 0; i < n; ++i) x.set(i, t.exponent[i]);
      x.set(n, static_cast<ExponentVector::value_type>(d - t.exponent.degree()));
      terms.push_back({t.coefficient, std::move(x)});
    }
    gens.emplace_back(n + 1, std::move(terms));
  }
  return Ideal(ideal.ring().extended(std::move(variable)), std::move(gens));
}

bool is_groebner_basis(std::span<const MarkedPolynomial> basis, const TermOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis, order).is_zero()) return false;
    }
  }
  return true;
}

bool ideal_contains(const MarkedReducedGB& gb, const TermOrder& order, const Polynomial& f) {
  auto elems = as_marked(gb);
  return normal_form(f, elems, order).is_zero();
}

bool same_ideal(const Ideal& a, const Ideal& b, const TermOrder& order) {
  if (a.nvars() != b.nvars()) return false;
  auto ga = buchberger(a, order);
  auto gb = buchberger(b, order);
  for (const auto& f : a.generators()) {
    if (!ideal_contains(gb, order, f)) return false;
  }
  for (const auto& f : b.generators()) {
    if (!ideal_contains(ga, order, f)) return false;
  }
  return true;
}

}  // namespace rfan
