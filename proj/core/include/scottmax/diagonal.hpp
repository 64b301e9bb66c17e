#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "scottmax/opens.hpp"

namespace scottmax {

struct DiagLevel {
  Nat k;
  Nat n;                // least n with x_{k,n} ∈ U_k
  LElem generator;      // compact generator of U_k below x_{k,n}

  bool operator==(const DiagLevel&) const = default;
};

/// Record that ⟨n₁,…,n_K⟩ lies in U₁ ∩ … ∩ U_K although every infinite
/// completion of it is a non-maximal plain sequence.
struct DiagCertificate {
  std::string family;
  Nat depth = 0;
  std::vector<DiagLevel> levels;
  std::vector<Nat> prefix;

  bool operator==(const DiagCertificate&) const = default;
};

struct BudgetExhausted {
  std::size_t tests = 0;
};

using LevelSearch = std::variant<Nat, BudgetExhausted>;

/// Least n ≥ 1 with x_{k,n} ∈ U, testing n = 1, 2, … for at most `budget` steps.
LevelSearch find_level_index(const OpenDesc& u, Nat k, std::size_t budget);

struct DiagFailure {
  enum class Reason { budget, closure };
  Nat level;
  Reason reason;
  std::string detail;
};

using DiagResult = std::variant<DiagCertificate, DiagFailure>;

DiagResult diagonalize(const IndexedFamily& family, Nat depth, std::size_t budget);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Re-checks a certificate against the family without trusting any of its
/// derived data.
CertificateCheck check_certificate(const DiagCertificate& cert, const IndexedFamily& family);
bool verify_certificate(const DiagCertificate& cert, const IndexedFamily& family);

/// The plain sequence prefix·⟨1,1,…⟩.
LElem witness_element(const DiagCertificate& cert);

}  // namespace scottmax
