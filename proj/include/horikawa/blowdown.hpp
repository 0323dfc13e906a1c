#pragma once

// Contracting disjoint class-T chains and passing to a Q-Gorenstein smoothing,
// at the level of numerical invariants.

#include <cstddef>
#include <string>
#include <vector>

#include "horikawa/cover.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/hj.hpp"
#include "horikawa/lattice.hpp"

namespace horikawa {

/// Discrepancies d_i (K_V = pi^* K_X - sum d_i E_i) of the chain:
/// the solution of sum_i d_i (E_i.E_j) = -(b_j - 2). Each d_i lies in [0, 1).
inline std::vector<rational> discrepancies(const ResolutionChain& chain) {
  const std::size_t r = chain.length();
  // Tridiagonal Gram: diag -b_i, off-diagonal 1. Thomas algorithm in exact rationals.
  std::vector<rational> diag(r), rhs(r);
  for (std::size_t i = 0; i < r; ++i) {
    diag[i] = -chain[i];
    rhs[i] = -(chain[i] - 2);
  }
  for (std::size_t i = 1; i < r; ++i) {
    if (diag[i - 1] == 0) throw internal_error("singular chain matrix");
    const rational w = rational(1) / diag[i - 1];
    diag[i] -= w;
    rhs[i] -= w * rhs[i - 1];
  }
  if (diag[r - 1] == 0) throw internal_error("singular chain matrix");
  std::vector<rational> d(r);
  d[r - 1] = rhs[r - 1] / diag[r - 1];
  for (std::size_t i = r - 1; i-- > 0;) d[i] = (rhs[i] - d[i + 1]) / diag[i];
  return d;
}

/// Increase of K^2 on contracting the chain: sum d_i (b_i - 2).
inline rational k2_correction(const ResolutionChain& chain) {
  const auto d = discrepancies(chain);
  rational total = 0;
  for (std::size_t i = 0; i < chain.length(); ++i) total += d[i] * (chain[i] - 2);
  return total;
}

/// Disjoint chains of curve classes on one surface, each with its classification.
class ContractionSet {
 public:
  ContractionSet(const BlownHirzebruch& surface, std::vector<std::vector<DivisorClass>> chains)
      : surface_(surface), chains_(std::move(chains)) {
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      const auto& ch = chains_[c];
      if (ch.empty()) throw precondition_error("contraction chain is empty");
      std::vector<integer> b;
      for (std::size_t i = 0; i < ch.size(); ++i) {
        for (std::size_t j = i; j < ch.size(); ++j) {
          const integer p = pairing(surface_, ch[i], ch[j]);
          if (i == j) b.push_back(-p);
          else if (j == i + 1 && p != 1) throw precondition_error("consecutive chain curves must meet once");
          else if (j > i + 1 && p != 0) throw precondition_error("non-consecutive chain curves must be disjoint");
        }
      }
      for (std::size_t o = c + 1; o < chains_.size(); ++o)
        for (const auto& x : ch)
          for (const auto& y : chains_[o])
            if (pairing(surface_, x, y) != 0) throw precondition_error("contraction chains must be disjoint");
      auto cls = recognize_class_t(ResolutionChain(std::move(b)));
      if (!cls.is_class_t() && !cls.is_rdp()) throw precondition_error("chain " + to_string(cls.chain) + " is not of class T");
      classifications_.push_back(std::move(cls));
    }
  }

  const BlownHirzebruch& surface() const { return surface_; }
  const std::vector<std::vector<DivisorClass>>& chains() const { return chains_; }
  const std::vector<ChainClassification>& classifications() const { return classifications_; }

 private:
  BlownHirzebruch surface_;
  std::vector<std::vector<DivisorClass>> chains_;
  std::vector<ChainClassification> classifications_;
};

struct ChainRecord {
  ResolutionChain chain;
  std::vector<rational> discrepancies;
  rational k2_correction;
  integer euler_drop = 0;
  integer smoothing_dimension = 0;
};

struct SmoothedFiberInvariants {
  SurfaceInvariants invariants;
  std::vector<ChainRecord> chains;
  /// p_g of the fibre is carried over from V, not derived independently.
  bool p_g_inferred = false;
  std::vector<std::string> warnings;
};

/// Invariants of the general fibre X_t after contracting `chains` on V and
/// smoothing: K^2 gains sum k2_correction, e drops by r + 1 - d per chain
/// (Milnor fibre of a class-T point has Euler number d), chi is unchanged.
inline SmoothedFiberInvariants smoothing_invariants(const SurfaceInvariants& v,
                                                    const std::vector<ChainClassification>& chains) {
  if (!v.K2 || !v.e || !v.chi) throw precondition_error("smoothing needs K^2, e and chi of the resolution");
  SmoothedFiberInvariants out;
  rational k2 = *v.K2;
  integer e = *v.e;
  for (const auto& cls : chains) {
    if (cls.is_rdp()) {
      out.warnings.push_back("rational double point chain " + to_string(cls.chain) + " ignored");
      continue;
    }
    if (!cls.is_class_t()) throw precondition_error("chain " + to_string(cls.chain) + " is not of class T");
    ChainRecord rec;
    rec.chain = cls.chain;
    rec.discrepancies = discrepancies(cls.chain);
    rec.k2_correction = k2_correction(cls.chain);
    rec.smoothing_dimension = cls.t_data().d;
    rec.euler_drop = static_cast<integer>(cls.chain.length()) + 1 - rec.smoothing_dimension;
    if (rec.smoothing_dimension >= 2)
      out.warnings.push_back("chain " + to_string(cls.chain) + " has d >= 2; only Noether consistency guards its bookkeeping");
    k2 += rec.k2_correction;
    e = checked::sub(e, rec.euler_drop);
    out.chains.push_back(std::move(rec));
  }
  if (denominator(k2) != 1) throw accounting_error("K^2 of the smoothed fibre is not an integer");

  out.invariants.chi = v.chi;
  out.invariants.K2 = static_cast<integer>(numerator(k2));
  out.invariants.e = e;
  if (v.p_g) {
    out.invariants.p_g = v.p_g;
    out.invariants.q = 1 - *v.chi + *v.p_g;
    out.p_g_inferred = true;
  }
  if (!out.invariants.noether_formula_holds())
    throw accounting_error("smoothed fibre violates 12 chi = K^2 + e");
  return out;
}

/// True iff the branch class is orthogonal to every curve of every chain.
inline bool branch_compatibility(const BlownHirzebruch& s, const DivisorClass& branch, const ContractionSet& set) {
  if (!(set.surface() == s)) throw precondition_error("contraction set lives on a different surface");
  for (const auto& chain : set.chains())
    for (const auto& c : chain)
      if (pairing(s, branch, c) != 0) return false;
  return true;
}

}  // namespace horikawa
