#include "scottmax/diagonal.hpp"

#include <algorithm>

namespace scottmax {

LevelSearch find_level_index(const OpenDesc& u, Nat k, std::size_t budget) {
  for (std::size_t step = 1; step <= budget; ++step)
    if (u.contains(LElem::x(k, step))) return Nat{step};
  return BudgetExhausted{budget};
}

DiagResult diagonalize(const IndexedFamily& family, Nat depth, std::size_t budget) {
  if (depth == 0) throw InputError("depth must be at least 1");

  DiagCertificate cert;
  cert.family = family.name();
  cert.depth = depth;

  for (Nat k = 1; k <= depth; ++k) {
    const OpenDesc open = family.at(k);
    auto found = find_level_index(open, k, budget);
    if (auto* out = std::get_if<BudgetExhausted>(&found))
      return DiagFailure{k, DiagFailure::Reason::budget,
                         "no x(" + std::to_string(k) + ",n) in U_" + std::to_string(k) + " for n <= " +
                             std::to_string(out->tests)};

    const Nat n = std::get<Nat>(found);
    const LElem point = LElem::x(k, n);
    cert.prefix.push_back(n);
    cert.levels.push_back({k, n, *open.generator_below(point)});

    // ⟨n₁,…,n_k⟩ dominates x_{k,n_k}, and extends the previous prefix which
    // already lies in U₁ ∩ … ∩ U_{k-1}; both are upward-closure steps.
    const LElem prefix = LElem::sigma(Seq::finite(cert.prefix));
    if (!leq(point, prefix))
      return DiagFailure{k, DiagFailure::Reason::closure, point.to_string() + " not below " + prefix.to_string()};
    for (Nat j = 1; j <= k; ++j) {
      if (!family.at(j).contains(prefix))
        return DiagFailure{k, DiagFailure::Reason::closure,
                           prefix.to_string() + " escaped U_" + std::to_string(j)};
    }
  }
  return cert;
}

CertificateCheck check_certificate(const DiagCertificate& cert, const IndexedFamily& family) {
  CertificateCheck out;
  auto fail = [&](std::string why) {
    out.ok = false;
    out.problems.push_back(std::move(why));
  };

  if (cert.depth == 0) fail("depth is zero");
  if (cert.levels.size() != cert.depth) fail("level count differs from depth");
  if (cert.prefix.size() != cert.depth) fail("prefix length differs from depth");
  if (!out.ok) return out;
  if (std::ranges::any_of(cert.prefix, [](Nat v) { return v == 0; })) {
    fail("prefix has a zero entry");
    return out;
  }

  for (Nat k = 1; k <= cert.depth; ++k) {
    const DiagLevel& level = cert.levels[k - 1];
    const std::string tag = "level " + std::to_string(k) + ": ";
    if (level.k != k) {
      fail(tag + "level index out of order");
      continue;
    }
    if (level.n == 0) {
      fail(tag + "rank is zero");
      continue;
    }
    const OpenDesc open = family.at(k);
    const LElem point = LElem::x(k, level.n);

    // (a) x_{k,n_k} ∈ U_k, witnessed by a compact generator of U_k.
    if (!open.contains(point)) fail(tag + point.to_string() + " not in U_k");
    if (!is_compact(level.generator) || !open.contains(level.generator) || !leq(level.generator, point))
      fail(tag + "generator " + level.generator.to_string() + " does not witness " + point.to_string());
    // n_k is the least such rank.
    if (level.n > 1 && open.contains(LElem::x(k, level.n - 1)))
      fail(tag + "rank " + std::to_string(level.n) + " is not the least");

    // (b) x_{k,n_k} ≤ ⟨n₁,…,n_k⟩.
    const std::vector<Nat> head(cert.prefix.begin(), cert.prefix.begin() + static_cast<std::ptrdiff_t>(k));
    if (cert.prefix[k - 1] != level.n) fail(tag + "prefix entry differs from rank");
    if (!leq(point, LElem::sigma(Seq::finite(head)))) fail(tag + point.to_string() + " not below the prefix");
  }

  // (c) the full prefix lies in every U_k.
  const LElem prefix = LElem::sigma(Seq::finite(cert.prefix));
  if (!intersection_member_prefix_check(family, prefix, cert.depth))
    fail(prefix.to_string() + " not in the intersection of U_1..U_" + std::to_string(cert.depth));

  // (d) the witness completion is a plain sequence strictly below its star.
  const LElem w = witness_element(cert);
  if (is_maximal(w) || !less(w, star(w))) fail("witness " + w.to_string() + " is maximal");
  if (!intersection_member_prefix_check(family, w, cert.depth))
    fail("witness " + w.to_string() + " not in the intersection");
  return out;
}

bool verify_certificate(const DiagCertificate& cert, const IndexedFamily& family) {
  return check_certificate(cert, family).ok;
}

LElem witness_element(const DiagCertificate& cert) {
  return LElem::sigma(Seq::periodic(cert.prefix, {1}));
}

}  // namespace scottmax
