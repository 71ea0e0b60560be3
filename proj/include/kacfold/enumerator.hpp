#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kacfold/cartan.hpp"
#include "kacfold/error.hpp"
#include "kacfold/field.hpp"
#include "kacfold/lattice.hpp"
#include "kacfold/matrix.hpp"
#include "kacfold/quiver.hpp"
#include "kacfold/representation.hpp"
#include "kacfold/roots.hpp"
#include "kacfold/skew.hpp"

namespace kacfold {

using BigCount = unsigned __int128;

inline std::string to_string(BigCount x) {
  if (x == 0) return "0";
  std::string s;
  while (x > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  return {s.rbegin(), s.rend()};
}

struct EnumeratorOptions {
  std::uint64_t cap_states = std::uint64_t{1} << 24;  // reduced states per dimension vector
  SearchOptions search;
};

/// Generators of GL_n(F): a diagonal scaling by a primitive element, one
/// transvection, a transposition and an n-cycle.
inline std::vector<Matrix> gl_generators(const FiniteField& f, std::size_t n) {
  std::vector<Matrix> gens;
  if (n == 0) return gens;
  if (f.size() > 2) {
    Matrix d = identity_matrix(n);
    d(0, 0) = f.primitive_element();
    gens.push_back(std::move(d));
  }
  if (n >= 2) {
    Matrix t = identity_matrix(n);
    t(0, 1) = 1;
    gens.push_back(std::move(t));
    Matrix s = identity_matrix(n);
    s(0, 0) = s(1, 1) = 0;
    s(0, 1) = s(1, 0) = 1;
    gens.push_back(std::move(s));
  }
  if (n >= 3) {
    Matrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) c((i + 1) % n, i) = 1;
    gens.push_back(std::move(c));
  }
  return gens;
}

namespace detail {

inline std::string key_of(const Matrix& m) {
  return std::string(reinterpret_cast<const char*>(m.data.data()), m.data.size() * sizeof(Elem));
}

inline BigCount saturating_mul(BigCount a, BigCount b) {
  const BigCount limit = BigCount{1} << 100;
  if (a != 0 && b > limit / a) return limit;
  return a * b;
}

/// Number of r-dimensional subspaces of F_q^w.
inline BigCount gaussian_binomial(std::uint64_t q, std::size_t w, std::size_t r) {
  BigCount num = 1, den = 1;
  for (std::size_t i = 0; i < r; ++i) {
    BigCount a = 1, b = 1;
    for (std::size_t k = 0; k < w - i; ++k) a = saturating_mul(a, q);
    for (std::size_t k = 0; k < i + 1; ++k) b = saturating_mul(b, q);
    num = saturating_mul(num, a - 1);
    den = saturating_mul(den, b - 1);
  }
  return num / den;
}

/// Row-reduced forms d x w of rank <= d: orbit representatives for the left
/// GL_d action on the stacked incoming maps of a sink.
struct SinkForms {
  int vertex = -1;
  std::size_t rows = 0;
  std::vector<int> arrows;
  std::vector<std::size_t> offsets;
  std::size_t width = 0;
  std::vector<Matrix> forms;
  std::vector<std::uint32_t> rank;
  std::unordered_map<std::string, std::uint32_t> index;

  void enumerate(const FiniteField& f) {
    const std::size_t max_rank = std::min(rows, width);
    for (std::size_t r = 0; r <= max_rank; ++r) {
      std::vector<std::size_t> piv(r);
      for (std::size_t i = 0; i < r; ++i) piv[i] = i;
      for (;;) {
        // free positions: right of each pivot, outside pivot columns
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t t = 0; t < r; ++t)
          for (std::size_t c = piv[t] + 1; c < width; ++c)
            if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_pos.emplace_back(t, c);
        Matrix base(rows, width);
        for (std::size_t t = 0; t < r; ++t) base(t, piv[t]) = 1;
        for_each_coefficients(f, free_pos.size(), [&](const std::vector<Elem>& c) {
          Matrix m = base;
          for (std::size_t k = 0; k < free_pos.size(); ++k) m(free_pos[k].first, free_pos[k].second) = c[k];
          index.emplace(key_of(m), static_cast<std::uint32_t>(forms.size()));
          forms.push_back(std::move(m));
          rank.push_back(static_cast<std::uint32_t>(r));
          return false;
        });
        // next combination
        std::size_t i = r;
        while (i > 0 && piv[i - 1] == width - r + i - 1) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t k = i; k < r; ++k) piv[k] = piv[k - 1] + 1;
      }
    }
  }

  std::uint32_t lookup(const FiniteField& f, const Matrix& stacked) const {
    return index.at(key_of(rref(f, stacked).reduced));
  }
};

/// Representations of one dimension vector modulo the GL action at sinks.
/// A reduced state is a row-reduced form per sink plus raw entries for all
/// other arrows; the remaining vertex groups act on these states.
class StateSpace {
 public:
  struct Generator {
    int vertex;
    Matrix g;
    Matrix g_inv;
  };

  StateSpace(QuiverPtr q, FiniteField f, LatticeVector dim, std::uint64_t cap)
      : quiver_(std::move(q)), field_(std::move(f)), dim_(std::move(dim)) {
    const Quiver& q_ = *quiver_;
    const std::size_t n = q_.vertex_count();
    if (dim_.size() != n) throw Error(ErrorKind::LatticeMismatch, "dimension vector length differs from the vertex count");
    for (auto x : dim_)
      if (x < 0) throw Error(ErrorKind::BadParameter, "negative dimension in " + to_string(dim_));
    std::vector<bool> active(q_.arrow_count(), false), has_out(n, false), has_in(n, false);
    for (std::size_t k = 0; k < q_.arrow_count(); ++k) {
      const auto& a = q_.arrows()[k];
      active[k] = dim_[a.source] > 0 && dim_[a.target] > 0;
      if (active[k]) {
        has_out[a.source] = true;
        has_in[a.target] = true;
        total_entries_ += dim_[a.source] * dim_[a.target];
      }
    }
    sink_of_.assign(n, -1);
    for (std::size_t v = 0; v < n; ++v)
      if (has_in[v] && !has_out[v]) {
        sink_of_[v] = static_cast<int>(sinks_.size());
        SinkForms s;
        s.vertex = static_cast<int>(v);
        s.rows = dim_[v];
        sinks_.push_back(std::move(s));
      }
    arrow_slot_.assign(q_.arrow_count(), -1);
    for (std::size_t k = 0; k < q_.arrow_count(); ++k) {
      if (!active[k]) continue;
      const auto& a = q_.arrows()[k];
      if (sink_of_[a.target] >= 0) {
        SinkForms& s = sinks_[sink_of_[a.target]];
        arrow_slot_[k] = static_cast<int>(s.arrows.size());
        s.arrows.push_back(static_cast<int>(k));
        s.offsets.push_back(s.width);
        s.width += dim_[a.source];
      } else {
        arrow_slot_[k] = static_cast<int>(free_arrows_.size());
        free_arrows_.push_back(static_cast<int>(k));
        free_offset_.push_back(free_entries_);
        free_entries_ += dim_[a.source] * dim_[a.target];
      }
    }

    // predicted size before any enumeration
    BigCount predicted = 1;
    for (const auto& s : sinks_) {
      BigCount forms = 0;
      for (std::size_t r = 0; r <= std::min(s.rows, s.width); ++r) forms += gaussian_binomial(field_.size(), s.width, r);
      predicted = saturating_mul(predicted, forms);
    }
    for (std::size_t k = 0; k < free_entries_; ++k) predicted = saturating_mul(predicted, field_.size());
    if (predicted > cap)
      throw Error(ErrorKind::BudgetExceeded, "dimension vector " + to_string(dim_) + " over F_" + field_.name() + " needs " +
                                                 kacfold::to_string(predicted) + " reduced states (cap " + std::to_string(cap) +
                                                 "; full space " + std::to_string(field_.size()) + "^" +
                                                 std::to_string(total_entries_) + ")");
    states_ = static_cast<std::uint64_t>(predicted);
    for (auto& s : sinks_) s.enumerate(field_);

    for (std::size_t v = 0; v < n; ++v) {
      if (dim_[v] == 0 || sink_of_[v] >= 0 || (!has_in[v] && !has_out[v])) continue;
      for (auto& g : gl_generators(field_, dim_[v])) {
        Matrix gi = *inverse(field_, g);
        generators_.push_back({static_cast<int>(v), std::move(g), std::move(gi)});
      }
    }
  }

  std::uint64_t states() const { return states_; }
  std::uint64_t total_entries() const { return total_entries_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const FiniteField& field() const { return field_; }

  struct State {
    std::vector<std::uint32_t> forms;
    std::vector<Elem> entries;
  };

  State decode(std::uint64_t code) const {
    State s{std::vector<std::uint32_t>(sinks_.size()), std::vector<Elem>(free_entries_)};
    for (std::size_t k = free_entries_; k-- > 0;) {
      s.entries[k] = static_cast<Elem>(code % field_.size());
      code /= field_.size();
    }
    for (std::size_t k = sinks_.size(); k-- > 0;) {
      s.forms[k] = static_cast<std::uint32_t>(code % sinks_[k].forms.size());
      code /= sinks_[k].forms.size();
    }
    return s;
  }

  std::uint64_t encode(const State& s) const {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < sinks_.size(); ++k) code = code * sinks_[k].forms.size() + s.forms[k];
    for (std::size_t k = 0; k < free_entries_; ++k) code = code * field_.size() + s.entries[k];
    return code;
  }

  std::uint64_t apply(std::uint64_t code, const Generator& gen) const {
    State s = decode(code);
    const Quiver& q = *quiver_;
    const FiniteField& f = field_;
    for (std::size_t slot = 0; slot < free_arrows_.size(); ++slot) {
      const auto& a = q.arrows()[free_arrows_[slot]];
      if (a.source != gen.vertex && a.target != gen.vertex) continue;
      Matrix m(dim_[a.target], dim_[a.source]);
      std::copy_n(s.entries.begin() + free_offset_[slot], m.data.size(), m.data.begin());
      m = a.target == gen.vertex ? multiply(f, gen.g, m) : multiply(f, m, gen.g_inv);
      std::copy(m.data.begin(), m.data.end(), s.entries.begin() + free_offset_[slot]);
    }
    for (std::size_t k = 0; k < sinks_.size(); ++k) {
      const SinkForms& sink = sinks_[k];
      bool touched = false;
      Matrix m = sink.forms[s.forms[k]];
      for (std::size_t b = 0; b < sink.arrows.size(); ++b) {
        if (q.arrows()[sink.arrows[b]].source != gen.vertex) continue;
        touched = true;
        const std::size_t w = gen.g_inv.rows;
        const Matrix block = multiply(f, column_block(m, sink.offsets[b], w), gen.g_inv);
        for (std::size_t i = 0; i < m.rows; ++i)
          for (std::size_t j = 0; j < w; ++j) m(i, sink.offsets[b] + j) = block(i, j);
      }
      if (touched) s.forms[k] = sink.lookup(f, m);
    }
    return encode(s);
  }

  Representation build(std::uint64_t code) const {
    const State s = decode(code);
    const Quiver& q = *quiver_;
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
      const auto& a = q.arrows()[k];
      Matrix m(dim_[a.target], dim_[a.source]);
      if (arrow_slot_[k] >= 0) {
        if (sink_of_[a.target] >= 0) {
          const int si = sink_of_[a.target];
          m = column_block(sinks_[si].forms[s.forms[si]], sinks_[si].offsets[arrow_slot_[k]], dim_[a.source]);
        } else {
          std::copy_n(s.entries.begin() + free_offset_[arrow_slot_[k]], m.data.size(), m.data.begin());
        }
      }
      maps.push_back(std::move(m));
    }
    return Representation{quiver_, field_, dim_, std::move(maps)};
  }

  std::uint64_t code_of(const Representation& x) const {
    if (x.dim != dim_) throw Error(ErrorKind::LatticeMismatch, "representation has dimension " + to_string(x.dim) + ", expected " + to_string(dim_));
    State s{std::vector<std::uint32_t>(sinks_.size()), std::vector<Elem>(free_entries_)};
    for (std::size_t k = 0; k < sinks_.size(); ++k) {
      std::vector<Matrix> blocks;
      for (int a : sinks_[k].arrows) blocks.push_back(x.maps[a]);
      s.forms[k] = sinks_[k].lookup(field_, hstack(blocks, sinks_[k].rows));
    }
    for (std::size_t slot = 0; slot < free_arrows_.size(); ++slot) {
      const Matrix& m = x.maps[free_arrows_[slot]];
      std::copy(m.data.begin(), m.data.end(), s.entries.begin() + free_offset_[slot]);
    }
    return encode(s);
  }

  /// Number of full matrix tuples that reduce to this state.
  BigCount fiber(std::uint64_t code) const {
    const State s = decode(code);
    BigCount n = 1;
    for (std::size_t k = 0; k < sinks_.size(); ++k) {
      BigCount qd = 1;
      for (std::size_t i = 0; i < sinks_[k].rows; ++i) qd *= field_.size();
      BigCount qi = 1;
      for (std::uint32_t i = 0; i < sinks_[k].rank[s.forms[k]]; ++i) {
        n *= qd - qi;
        qi *= field_.size();
      }
    }
    return n;
  }

 private:
  QuiverPtr quiver_;
  FiniteField field_;
  LatticeVector dim_;
  std::vector<SinkForms> sinks_;
  std::vector<int> sink_of_;
  std::vector<int> arrow_slot_;
  std::vector<int> free_arrows_;
  std::vector<std::size_t> free_offset_;
  std::size_t free_entries_ = 0;
  std::uint64_t total_entries_ = 0;
  std::uint64_t states_ = 1;
  std::vector<Generator> generators_;
};

}  // namespace detail

struct IsoClass {
  std::uint64_t code = 0;  // least reduced state in the class
  Representation representative;
  BigCount orbit_size = 0;  // matrix tuples isomorphic to the representative
  std::uint64_t reduced_size = 0;
};

/// Every isomorphism class of representations of one dimension vector.
class IsoClassCatalog {
 public:
  IsoClassCatalog(QuiverPtr q, FiniteField f, LatticeVector dim, const EnumeratorOptions& opts = {})
      : space_(q, f, dim, opts.cap_states), quiver_(std::move(q)), field_(std::move(f)), dim_(std::move(dim)) {
    constexpr std::uint32_t unseen = ~std::uint32_t{0};
    class_of_.assign(space_.states(), unseen);
    std::vector<std::uint64_t> queue;
    for (std::uint64_t start = 0; start < space_.states(); ++start) {
      if (class_of_[start] != unseen) continue;
      const auto id = static_cast<std::uint32_t>(classes_.size());
      IsoClass c;
      c.code = start;
      queue.assign(1, start);
      class_of_[start] = id;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint64_t s = queue[head];
        c.orbit_size += space_.fiber(s);
        for (const auto& g : space_.generators()) {
          const std::uint64_t t = space_.apply(s, g);
          if (class_of_[t] == unseen) {
            class_of_[t] = id;
            queue.push_back(t);
          }
        }
      }
      c.reduced_size = queue.size();
      c.representative = space_.build(start);
      classes_.push_back(std::move(c));
    }
  }

  const QuiverPtr& quiver() const { return quiver_; }
  const FiniteField& field() const { return field_; }
  const LatticeVector& dim() const { return dim_; }
  const std::vector<IsoClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  const IsoClass& operator[](std::size_t k) const { return classes_.at(k); }

  std::size_t class_index(const Representation& x) const { return class_of_.at(space_.code_of(x)); }

  /// q^(number of matrix entries)
  BigCount total_tuples() const {
    BigCount n = 1;
    for (std::uint64_t k = 0; k < space_.total_entries(); ++k) n *= field_.size();
    return n;
  }

  std::uint64_t reduced_states() const { return space_.states(); }

 private:
  detail::StateSpace space_;
  QuiverPtr quiver_;
  FiniteField field_;
  LatticeVector dim_;
  std::vector<IsoClass> classes_;
  std::vector<std::uint32_t> class_of_;
};

inline IsoClassCatalog isoclasses(QuiverPtr q, const LatticeVector& d, const FiniteField& f, const EnumeratorOptions& opts = {}) {
  return IsoClassCatalog(std::move(q), f, d, opts);
}

struct ClassRef {
  LatticeVector dim;
  std::size_t index = 0;

  auto operator<=>(const ClassRef&) const = default;
};

inline bool support_connected(const Quiver& q, const LatticeVector& d) {
  return detail::support_connected(quiver_lattice(q), d);
}

/// Caches catalogs and indecomposability flags for one quiver and field.
class Enumerator {
 public:
  Enumerator(QuiverPtr q, FiniteField f, EnumeratorOptions opts = {})
      : quiver_(std::move(q)), field_(std::move(f)), opts_(opts) {}

  const QuiverPtr& quiver() const { return quiver_; }
  const FiniteField& field() const { return field_; }
  const EnumeratorOptions& options() const { return opts_; }

  const IsoClassCatalog& catalog(const LatticeVector& d) {
    auto it = catalogs_.find(d);
    if (it == catalogs_.end()) it = catalogs_.emplace(d, std::make_unique<IsoClassCatalog>(quiver_, field_, d, opts_)).first;
    return *it->second;
  }

  bool is_indecomposable(const LatticeVector& d, std::size_t k) {
    auto& flags = flags_[d];
    const IsoClassCatalog& cat = catalog(d);
    if (flags.empty()) flags.assign(cat.size(), -1);
    if (flags[k] < 0) flags[k] = kacfold::is_indecomposable(cat[k].representative, opts_.search) ? 1 : 0;
    return flags[k] == 1;
  }

  std::vector<std::size_t> indecomposable_classes(const LatticeVector& d) {
    std::vector<std::size_t> out;
    if (is_zero(d) || !support_connected(*quiver_, d)) return out;
    const std::size_t n = catalog(d).size();
    for (std::size_t k = 0; k < n; ++k)
      if (is_indecomposable(d, k)) out.push_back(k);
    return out;
  }

  ClassRef locate(const Representation& x) { return {x.dim, catalog(x.dim).class_index(x)}; }

  const Representation& representative(const ClassRef& c) { return catalog(c.dim)[c.index].representative; }

 private:
  QuiverPtr quiver_;
  FiniteField field_;
  EnumeratorOptions opts_;
  std::map<LatticeVector, std::unique_ptr<IsoClassCatalog>> catalogs_;
  std::map<LatticeVector, std::vector<int>> flags_;
};

inline std::vector<Representation> indecomposable_classes(QuiverPtr q, const LatticeVector& d, const FiniteField& f,
                                                          const EnumeratorOptions& opts = {}) {
  Enumerator e(std::move(q), f, opts);
  std::vector<Representation> out;
  for (auto k : e.indecomposable_classes(d)) out.push_back(e.catalog(d)[k].representative);
  return out;
}

/// An orbit of indecomposable classes under a twist operation whose summed
/// dimension vector is the requested one.
struct TwistOrbit {
  std::vector<ClassRef> members;  // starting from the least member, in twist order
  int period = 1;
  LatticeVector dim;
  Representation sum;
};

using RepresentationOp = std::function<Representation(const Representation&)>;
using DimensionOp = std::function<LatticeVector(const LatticeVector&)>;

/// Orbits of indecomposables Z under `op` with dim Z + dim op(Z) + ... = target.
inline std::vector<TwistOrbit> twist_orbits(Enumerator& e, const LatticeVector& target, const RepresentationOp& op,
                                            const DimensionOp& dim_op) {
  if (dim_op(target) != target) throw Error(ErrorKind::NotFixed, to_string(target) + " is not fixed by the twist");
  std::vector<TwistOrbit> out;
  std::set<ClassRef> seen;
  for (const auto& beta : vectors_below(target)) {
    // the orbit sum of dim Z is a multiple of the dimension-orbit sum of beta
    LatticeVector s = beta;
    for (LatticeVector w = dim_op(beta); w != beta; w = dim_op(w)) s = s + w;
    std::int64_t m = 0;
    bool multiple = true;
    for (std::size_t i = 0; i < s.size() && multiple; ++i) {
      if (s[i] == 0) {
        multiple = target[i] == 0;
        continue;
      }
      if (target[i] % s[i] != 0) multiple = false;
      const std::int64_t mi = target[i] / s[i];
      if (m == 0) m = mi;
      if (mi != m) multiple = false;
    }
    if (!multiple || m < 1) continue;
    if (!support_connected(*e.quiver(), beta)) continue;

    for (std::size_t k : e.indecomposable_classes(beta)) {
      const ClassRef start{beta, k};
      if (seen.count(start)) continue;
      std::vector<ClassRef> members{start};
      std::vector<Representation> chain{e.representative(start)};
      LatticeVector total = beta;
      for (;;) {
        Representation next = op(chain.back());
        const ClassRef ref = e.locate(next);
        if (ref == start) break;
        members.push_back(ref);
        total = total + ref.dim;
        chain.push_back(std::move(next));
      }
      for (const auto& r : members) seen.insert(r);
      if (total != target) continue;
      // rotate so the orbit starts at its least member
      const auto least = std::min_element(members.begin(), members.end()) - members.begin();
      std::rotate(members.begin(), members.begin() + least, members.end());
      std::rotate(chain.begin(), chain.begin() + least, chain.end());
      TwistOrbit orbit;
      orbit.period = static_cast<int>(members.size());
      orbit.members = std::move(members);
      orbit.dim = target;
      orbit.sum = direct_sum(chain);
      out.push_back(std::move(orbit));
    }
  }
  std::sort(out.begin(), out.end(), [](const TwistOrbit& a, const TwistOrbit& b) { return a.members.front() < b.members.front(); });
  return out;
}

/// ii-indecomposable classes of dimension d: orbit sums of indecomposables under the a-twist.
inline std::vector<TwistOrbit> ii_classes(Enumerator& e, const Automorphism& a, const LatticeVector& d) {
  return twist_orbits(
      e, d, [&a](const Representation& x) { return twist_auto(a, x); },
      [&a](const LatticeVector& v) { return act_on_dimension_vector(a, v); });
}

inline std::vector<TwistOrbit> ii_classes(QuiverPtr q, const Automorphism& a, const LatticeVector& d, const FiniteField& f,
                                          const EnumeratorOptions& opts = {}) {
  Enumerator e(std::move(q), f, opts);
  return ii_classes(e, a, d);
}

/// Unfolded data for counting species representations over F_q.
class SpeciesCounter {
 public:
  SpeciesCounter(const ValuedQuiver& vq, const FiniteField& base, const EnumeratorOptions& opts = {})
      : unfolded_(unfold(vq)),
        orbits_(orbit_structure(unfolded_.quiver, unfolded_.automorphism)),
        base_(base),
        big_(make_field(base.characteristic(), base.degree() * unfolded_.automorphism.order)),
        inverse_(inverse(unfolded_.automorphism)),
        enumerator_(share(unfolded_.quiver), big_, opts) {}

  /// Orbits of indecomposables Y over F_{q^t} under Y -> a^-1(tau Y) with
  /// summed dimension f^-1(alpha).
  std::vector<TwistOrbit> orbits(const LatticeVector& alpha) {
    const LatticeVector target = f_inverse(orbits_, alpha);
    const int s = base_.degree();
    const Automorphism& inv = inverse_;
    return twist_orbits(
        enumerator_, target, [&inv, s](const Representation& x) { return twist_auto(inv, twist_frobenius(s, x)); },
        [&inv](const LatticeVector& v) { return act_on_dimension_vector(inv, v); });
  }

  std::size_t count(const LatticeVector& alpha) { return orbits(alpha).size(); }

  const QuiverWithAutomorphism& unfolded() const { return unfolded_; }
  const FiniteField& extension() const { return big_; }

 private:
  QuiverWithAutomorphism unfolded_;
  OrbitStructure orbits_;
  FiniteField base_;
  FiniteField big_;
  Automorphism inverse_;
  Enumerator enumerator_;
};

inline std::size_t species_count(const ValuedQuiver& vq, const LatticeVector& alpha, const FiniteField& base,
                                 const EnumeratorOptions& opts = {}) {
  SpeciesCounter counter(vq, base, opts);
  return counter.count(alpha);
}

struct KacRow {
  LatticeVector dim;
  RootKind kind = RootKind::NonRoot;
  std::size_t count = 0;
};

struct KacReport {
  std::vector<KacRow> rows;  // roots and every dimension with an indecomposable
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
};

/// Dimension vectors of indecomposables of height <= H against the positive roots.
inline KacReport verify_kac(QuiverPtr q, const FiniteField& f, std::int64_t max_height, const EnumeratorOptions& opts = {}) {
  Enumerator e(q, f, opts);
  const RootSet roots = positive_roots_up_to(quiver_lattice(*q), max_height);
  KacReport report;
  for (const auto& d : nonnegative_vectors_up_to(q->vertex_count(), max_height)) {
    const RootKind kind = roots.kind_of(d);
    const std::size_t count = e.indecomposable_classes(d).size();
    if (kind == RootKind::NonRoot && count == 0) continue;
    report.rows.push_back({d, kind, count});
    if (kind == RootKind::NonRoot)
      report.violations.push_back(to_string(d) + " is not a root but has " + std::to_string(count) + " indecomposable classes");
    else if (count == 0)
      report.violations.push_back("root " + to_string(d) + " has no indecomposable");
    else if (kind == RootKind::Real && count != 1)
      report.violations.push_back("real root " + to_string(d) + " has " + std::to_string(count) + " indecomposable classes");
  }
  return report;
}

struct MainRow {
  LatticeVector alpha;
  LatticeVector dim;
  RootKind kind = RootKind::NonRoot;
  std::int64_t root_length = 0;
  std::vector<int> periods;  // summand count of each ii class
};

struct MainReport {
  bool characteristic_warning = false;
  std::vector<MainRow> rows;
  std::vector<LatticeVector> imaginary_unique;  // imaginary folded roots with a single ii class
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
};

/// ii-indecomposables of dimension f^-1(alpha) against the folded root system.
inline MainReport verify_main_theorem(QuiverPtr q, const Automorphism& a, const FiniteField& f, std::int64_t max_height,
                                      const EnumeratorOptions& opts = {}) {
  const FoldData fd = fold(*q, a);
  const RootSet roots = positive_roots_up_to(folded_lattice(fd), max_height);
  Enumerator e(q, f, opts);
  MainReport report;
  report.characteristic_warning = a.order % static_cast<int>(f.characteristic()) == 0;
  for (const auto& alpha : nonnegative_vectors_up_to(fd.orbits.orbit_count(), max_height)) {
    MainRow row;
    row.alpha = alpha;
    row.dim = f_inverse(fd.orbits, alpha);
    row.kind = roots.kind_of(alpha);
    row.root_length = root_length(fd.B, alpha);
    for (const auto& c : ii_classes(e, a, row.dim)) row.periods.push_back(c.period);
    const std::size_t count = row.periods.size();
    if (row.kind == RootKind::NonRoot && count == 0) continue;
    if (row.kind == RootKind::NonRoot)
      report.violations.push_back("f" + to_string(row.dim) + " = " + to_string(alpha) + " is not a folded root but has ii classes");
    else if (count == 0)
      report.violations.push_back("folded root " + to_string(alpha) + " has no ii-indecomposable");
    else if (row.kind == RootKind::Real) {
      if (count != 1)
        report.violations.push_back("real folded root " + to_string(alpha) + " has " + std::to_string(count) + " ii classes");
      else if (row.periods.front() != row.root_length)
        report.violations.push_back("real folded root " + to_string(alpha) + " has " + std::to_string(row.periods.front()) +
                                    " summands, root length " + std::to_string(row.root_length));
    }
    if (row.kind == RootKind::Imaginary && count == 1) report.imaginary_unique.push_back(alpha);
    report.rows.push_back(std::move(row));
  }
  return report;
}

struct SpeciesRow {
  LatticeVector alpha;
  RootKind kind = RootKind::NonRoot;
  std::size_t count = 0;
};

struct SpeciesReport {
  std::vector<SpeciesRow> rows;  // every vector of height <= H
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
};

inline SpeciesReport verify_species_theorem(const ValuedQuiver& vq, const FiniteField& base, std::int64_t max_height,
                                            const EnumeratorOptions& opts = {}) {
  const RootSet roots = positive_roots_up_to(valued_lattice(vq), max_height);
  SpeciesCounter counter(vq, base, opts);
  SpeciesReport report;
  for (const auto& alpha : nonnegative_vectors_up_to(vq.vertices.size(), max_height)) {
    SpeciesRow row{alpha, roots.kind_of(alpha), counter.count(alpha)};
    if (row.kind == RootKind::NonRoot && row.count != 0)
      report.violations.push_back(to_string(alpha) + " is not a root but I = " + std::to_string(row.count));
    if (row.kind != RootKind::NonRoot && row.count == 0) report.violations.push_back("root " + to_string(alpha) + " has I = 0");
    if (row.kind == RootKind::Real && row.count != 1)
      report.violations.push_back("real root " + to_string(alpha) + " has I = " + std::to_string(row.count));
    report.rows.push_back(std::move(row));
  }
  return report;
}

struct MultisetRow {
  LatticeVector dim;
  std::size_t classes = 0;
  BigCount multisets = 0;
};

struct MultisetReport {
  std::vector<MultisetRow> rows;
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
};

/// Class counts against multisets of indecomposables with the same total dimension.
inline MultisetReport multiset_crosscheck(QuiverPtr q, const FiniteField& f, std::int64_t max_height,
                                          const EnumeratorOptions& opts = {}) {
  Enumerator e(q, f, opts);
  const auto dims = nonnegative_vectors_up_to(q->vertex_count(), max_height);
  std::map<LatticeVector, BigCount> ways;
  ways[LatticeVector(q->vertex_count(), 0)] = 1;
  for (const auto& d : dims) ways[d] = 0;
  for (const auto& beta : dims) {
    const std::size_t n = e.indecomposable_classes(beta).size();
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& v : dims)  // ascending height, so v - beta is already final for this pass
        if (dominated_by(beta, v)) ways[v] += ways[v - beta];
  }
  MultisetReport report;
  for (const auto& d : dims) {
    MultisetRow row{d, e.catalog(d).size(), ways[d]};
    if (BigCount(row.classes) != row.multisets)
      report.violations.push_back(to_string(d) + ": " + std::to_string(row.classes) + " classes vs " + to_string(row.multisets) +
                                  " multisets");
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace kacfold
