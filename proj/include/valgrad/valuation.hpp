#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valgrad/corpus.hpp"
#include "valgrad/poly.hpp"

namespace valgrad {

/**
 * A valuation on K[x], evaluated exactly. Concrete forms are finite
 * augmentation towers, truncations, and the chain-limit evaluators of
 * chain.hpp. Handles are immutable after construction; evaluation is pure.
 */
template <BaseField F>
class Valuation {
 public:
  explicit Valuation(F field) : field_(std::move(field)) {}
  virtual ~Valuation() = default;

  const F& field() const { return field_; }
  virtual Value value(const Poly<F>& f) const = 0;

  // Structural identity; the equality used for graded-element handles.
  virtual bool same_valuation(const Valuation& other) const = 0;
  virtual std::string describe() const = 0;

 protected:
  F field_;
};

template <BaseField F>
using ValuationPtr = std::shared_ptr<const Valuation<F>>;

template <BaseField F>
bool same_handle(const ValuationPtr<F>& a, const ValuationPtr<F>& b) {
  return a == b || (a && b && a->same_valuation(*b));
}

template <BaseField F>
struct Stage {
  Poly<F> key;  // monic, non-constant
  Value gamma;

  friend bool operator==(const Stage& a, const Stage& b) = default;
};

/**
 * A finite augmentation tower over a Gauss valuation.
 *
 * Stage 1 has key x and assigns value(sum a_i x^i) = min(val0(a_i) + i*gamma_1).
 * Each later stage k reads values off the stage-k key expansion:
 * value_k(f) = min_j(value_{k-1}(f_j) + j*gamma_k). Construction enforces
 * gamma_k > value_{k-1}(Q_k), monic nondecreasing-degree keys, and finiteness
 * of every gamma except possibly the last (+inf marks nontrivial support).
 */
template <BaseField F>
class Tower final : public Valuation<F> {
 public:
  Tower(F field, std::vector<Stage<F>> stages) : Valuation<F>(std::move(field)), stages_(std::move(stages)) {
    validate();
  }

  static Tower gauss(const F& field, Value gamma) {
    return Tower(field, {Stage<F>{Poly<F>::x(field), std::move(gamma)}});
  }

  std::size_t num_stages() const { return stages_.size(); }
  const Stage<F>& stage(std::size_t i) const { return stages_.at(i); }
  const std::vector<Stage<F>>& stages() const { return stages_; }
  const Stage<F>& top() const { return stages_.back(); }

  Value value(const Poly<F>& f) const override { return prefix_value(stages_.size(), f); }

  // The valuation given by the first k stages.
  Value prefix_value(std::size_t k, const Poly<F>& f) const {
    if (f.is_zero()) return Value::pos_inf();
    if (k == 1) {
      std::vector<Value> terms;
      for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (F::is_zero(f.coeff(i))) continue;
        terms.push_back(this->field_.val(f.coeff(i)) + stages_[0].gamma.scaled(i));
      }
      return value_min(terms).value;
    }
    const auto parts = q_expansion(f, stages_[k - 1].key);
    std::vector<Value> terms;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (parts[j].is_zero()) continue;
      Value term = prefix_value(k - 1, parts[j]);
      if (j > 0) term = term + stages_[k - 1].gamma.scaled(j);
      terms.push_back(term);
    }
    return value_min(terms).value;
  }

  // Last stage whose key equals q, if any.
  std::optional<std::size_t> stage_index_of(const Poly<F>& q) const {
    for (std::size_t i = stages_.size(); i > 0; --i)
      if (stages_[i - 1].key == q) return i - 1;
    return std::nullopt;
  }

  // First k stages with the top value replaced; used by truncation.
  Tower cut(std::size_t k, Value new_gamma) const {
    std::vector<Stage<F>> out(stages_.begin(), stages_.begin() + k);
    out.back().gamma = std::move(new_gamma);
    return Tower(this->field_, std::move(out));
  }

  bool same_valuation(const Valuation<F>& other) const override {
    const auto* t = dynamic_cast<const Tower*>(&other);
    return t && t->field() == this->field_ && t->stages_ == stages_;
  }

  std::string describe() const override {
    std::string out = "tower[";
    for (std::size_t i = 0; i < stages_.size(); ++i) {
      if (i) out += "; ";
      out += "(" + stages_[i].key.str() + ") -> " + stages_[i].gamma.str();
    }
    return out + "]";
  }

 private:
  void validate() const {
    if (stages_.empty()) throw InvalidDescriptor("tower needs at least one stage");
    if (stages_[0].key != Poly<F>::x(this->field_))
      throw InvalidDescriptor("stage 1 key must be x");
    for (std::size_t i = 0; i < stages_.size(); ++i) {
      const Stage<F>& s = stages_[i];
      if (s.key.degree() < 1) throw ConstantModulus();
      if (!s.key.is_monic()) throw NotMonic(s.key.str());
      if (s.gamma.is_neg_inf()) throw InvalidDescriptor("stage value -inf is not allowed");
      if (i + 1 < stages_.size() && s.gamma.is_pos_inf())
        throw InvalidDescriptor("only the final stage value may be +inf");
      if (i > 0) {
        if (s.key.degree() < stages_[i - 1].key.degree())
          throw InvalidDescriptor("stage key degrees must be nondecreasing");
        const Value prev = prefix_value(i, s.key);
        if (!(s.gamma > prev))
          throw InvalidDescriptor("stage value " + s.gamma.str() + " must exceed " + prev.str() +
                                  ", the previous-stage value of " + s.key.str());
      }
    }
  }

  std::vector<Stage<F>> stages_;
};

template <BaseField F>
using TowerPtr = std::shared_ptr<const Tower<F>>;

template <BaseField F, class... Args>
TowerPtr<F> make_tower(Args&&... args) {
  return std::make_shared<const Tower<F>>(std::forward<Args>(args)...);
}

/**
 * Truncation of an arbitrary valuation at a non-constant q: the minimum of
 * value(f_i q^i) over the q-expansion. Towers truncated at one of their own
 * stage keys reduce to a cut tower instead (see truncation()).
 */
template <BaseField F>
class Truncation final : public Valuation<F> {
 public:
  Truncation(ValuationPtr<F> base, Poly<F> q)
      : Valuation<F>(base->field()), base_(std::move(base)), q_(std::move(q)), q_value_(base_->value(q_)) {
    if (q_.degree() < 1) throw ConstantModulus();
    if (!q_.is_monic()) throw NotMonic(q_.str());
  }

  const ValuationPtr<F>& base() const { return base_; }
  const Poly<F>& q() const { return q_; }

  Value value(const Poly<F>& f) const override {
    if (f.is_zero()) return Value::pos_inf();
    const auto parts = q_expansion(f, q_);
    std::vector<Value> terms;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].is_zero()) continue;
      Value term = base_->value(parts[i]);
      if (i > 0) term = term + q_value_.scaled(i);
      terms.push_back(term);
    }
    return value_min(terms).value;
  }

  bool same_valuation(const Valuation<F>& other) const override {
    const auto* t = dynamic_cast<const Truncation*>(&other);
    return t && t->q_ == q_ && t->base_->same_valuation(*base_);
  }

  std::string describe() const override {
    return "truncation[" + base_->describe() + " at " + q_.str() + "]";
  }

 private:
  ValuationPtr<F> base_;
  Poly<F> q_;
  Value q_value_;
};

template <BaseField F>
Value evaluate(const Valuation<F>& v, const Poly<F>& f) {
  return v.value(f);
}

/**
 * The truncation handle of v at q. When v is a tower and q is one of its
 * stage keys, the result is the tower cut at that stage with the top value
 * replaced by v(q); the two forms agree pointwise.
 */
template <BaseField F>
ValuationPtr<F> truncation(const ValuationPtr<F>& v, const Poly<F>& q) {
  if (q.degree() < 1) throw ConstantModulus();
  if (!q.is_monic()) throw NotMonic(q.str());
  if (const auto* tower = dynamic_cast<const Tower<F>*>(v.get())) {
    if (auto idx = tower->stage_index_of(q))
      return make_tower<F>(tower->cut(*idx + 1, tower->value(q)));
  }
  return std::make_shared<const Truncation<F>>(v, q);
}

/**
 * The level of f: max over 1 <= b <= deg(f) of (value(f) - value(d_b f)) / b
 * over the Hasse derivatives d_b with finite value. Nonzero constants sit at
 * -inf; support members at +inf.
 */
template <BaseField F>
Value epsilon(const Valuation<F>& v, const Poly<F>& f) {
  if (f.is_zero()) return Value::pos_inf();
  const Value vf = v.value(f);
  if (vf.is_pos_inf()) return Value::pos_inf();
  if (f.degree() == 0) return Value::neg_inf();
  Value best = Value::neg_inf();
  for (unsigned long b = 1; b <= static_cast<unsigned long>(f.degree()); ++b) {
    const Poly<F> db = hasse_derivative(f, b);
    if (db.is_zero()) continue;
    const Value vb = v.value(db);
    if (!vb.finite()) continue;
    const Value candidate = (vf - vb).divided(b);
    if (candidate > best) best = candidate;
  }
  return best;
}

template <BaseField F>
struct KeyPolyReport {
  enum class Verdict { certified_by_construction, passed_corpus, refuted };

  Poly<F> candidate;
  Verdict verdict;
  std::size_t corpus_size = 0;
  std::optional<std::pair<Poly<F>, Poly<F>>> witness;  // refuting pair
  Value level;                                         // epsilon of the candidate

  bool refuted() const { return verdict == Verdict::refuted; }
};

/**
 * The product criterion for one pair: with fg = l*Q + r the euclidean
 * division, a key polynomial satisfies value(fg) = value(r) < value(l*Q).
 * Returns true when the pair VIOLATES the criterion.
 */
template <BaseField F>
bool key_poly_violation(const Valuation<F>& v, const Poly<F>& Q, const Poly<F>& f, const Poly<F>& g) {
  const Poly<F> fg = f * g;
  const auto [l, r] = divrem(fg, Q);
  const Value vfg = v.value(fg);
  const Value vr = v.value(r);
  const Value vlq = v.value(l) + v.value(Q);
  return !(vfg == vr && vfg < vlq);
}

/**
 * Falsification-based key-polynomial test. The top stage of a tower is
 * certified by construction; otherwise every corpus pair of degree < deg(Q)
 * is run through the product criterion, and the first violation refutes Q
 * with a re-checkable witness.
 */
template <BaseField F>
KeyPolyReport<F> key_poly_test(const Valuation<F>& v, const Poly<F>& Q, const CorpusSpec& spec = {}) {
  if (Q.degree() < 1) throw ConstantModulus();
  if (!Q.is_monic()) throw NotMonic(Q.str());
  using Verdict = typename KeyPolyReport<F>::Verdict;
  KeyPolyReport<F> report{Q, Verdict::passed_corpus, 0, std::nullopt, epsilon(v, Q)};
  if (const auto* tower = dynamic_cast<const Tower<F>*>(&v); tower && tower->top().key == Q) {
    report.verdict = Verdict::certified_by_construction;
    return report;
  }
  const auto pairs = corpus_pairs(v.field(), spec, Q.degree() - 1);
  report.corpus_size = pairs.size();
  for (const auto& [f, g] : pairs) {
    if (key_poly_violation(v, Q, f, g)) {
      report.verdict = Verdict::refuted;
      report.witness = {f, g};
      return report;
    }
  }
  return report;
}

template <BaseField F>
struct CompareResult {
  bool leq;                        // v(f) <= w(f) on everything examined
  std::optional<Poly<F>> witness;  // some f with v(f) > w(f) when !leq
  bool exact;                      // decided by the shared-stage rule, not sampling
};

/**
 * Order check for v <= w. Exact when both are towers sharing every stage
 * except the final value (the minimum formula is monotone in the top value);
 * otherwise refutation-complete sampling over the corpus.
 */
template <BaseField F>
CompareResult<F> compare(const Valuation<F>& v, const Valuation<F>& w, const CorpusSpec& spec = {}) {
  if (!(v.field() == w.field())) throw FieldMismatch();
  const auto* tv = dynamic_cast<const Tower<F>*>(&v);
  const auto* tw = dynamic_cast<const Tower<F>*>(&w);
  if (tv && tw && tv->num_stages() == tw->num_stages()) {
    bool shared = true;
    for (std::size_t i = 0; i + 1 < tv->num_stages() && shared; ++i)
      shared = tv->stage(i) == tw->stage(i);
    if (shared && tv->top().key == tw->top().key) {
      if (tv->top().gamma <= tw->top().gamma) return {true, std::nullopt, true};
      return {false, tv->top().key, true};
    }
  }
  auto sample = corpus_polys(v.field(), spec, spec.max_degree);
  if (tv) for (const auto& s : tv->stages()) sample.push_back(s.key);
  if (tw) for (const auto& s : tw->stages()) sample.push_back(s.key);
  for (const auto& f : sample)
    if (v.value(f) > w.value(f)) return {false, f, false};
  return {true, std::nullopt, false};
}

enum class ValuationClass { residue_transcendental, value_transcendental, has_support };

inline const char* to_string(ValuationClass c) {
  switch (c) {
    case ValuationClass::residue_transcendental: return "residue_transcendental";
    case ValuationClass::value_transcendental: return "value_transcendental";
    default: return "has_support";
  }
}

/**
 * Trichotomy for finite towers. A final value of +inf means nontrivial
 * support. Every other tower here takes rational values, whose group has
 * torsion quotient over the base, so the residue field must grow: such
 * towers are residue-transcendental. (value_transcendental is reserved for
 * irrational stage values, which this representation does not admit.)
 */
template <BaseField F>
ValuationClass classify(const Tower<F>& v) {
  if (v.top().gamma.is_pos_inf()) return ValuationClass::has_support;
  return ValuationClass::residue_transcendental;
}

}  // namespace valgrad
