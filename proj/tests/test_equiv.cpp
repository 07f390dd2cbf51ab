#include "doctest.h"

#include "cstar/equiv.hpp"

using cstar::AmpleCertificate;
using cstar::Chain;
using cstar::enumerate_chains;
using cstar::EnumerationBounds;
using cstar::Int;
using cstar::ModuliData;
using cstar::Rational;

namespace {

// ground-truth decision for small bounds: try every coefficient tuple
bool brute_certificate(const ModuliData& md, std::int64_t bound) {
  std::vector<Chain> duals;
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (const auto& c : md.chains) {
    duals.push_back(cstar::dual_chain(c));
    sizes.push_back(duals.back().size());
    total += duals.back().size();
  }
  std::vector<Int> flat(total, 1);
  for (Int a = 1; a <= bound; ++a) {
    for (;;) {
      AmpleCertificate cert;
      cert.a = a;
      std::size_t at = 0;
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        cert.coeffs.emplace_back(flat.begin() + static_cast<long>(at),
                                 flat.begin() + static_cast<long>(at + sizes[i]));
        at += sizes[i];
      }
      if (verify_certificate(md, cert)) return true;
      // odometer over the flat coefficient vector
      std::size_t pos = 0;
      while (pos < total && flat[pos] == bound) flat[pos++] = 1;
      if (pos == total) break;
      flat[pos] += 1;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("validation report") {
  const auto ok = validate_moduli(ModuliData(0, 1, {Chain{2}}));
  CHECK(ok.valid);
  CHECK(ok.sum == Rational(1, 2));
  CHECK(ok.s == 1);

  const auto boundary = validate_moduli(ModuliData(0, 1, {Chain{2}, Chain{2}}));
  CHECK_FALSE(boundary.valid);  // the sum must be strictly below k
  CHECK(boundary.sum == 1);

  const auto empty = validate_moduli(ModuliData(0, 2, {}));
  CHECK(empty.valid);
  CHECK(empty.sum == 0);

  const auto mixed = validate_moduli(ModuliData(0, 1, {Chain{2}, Chain{3}}));
  CHECK(mixed.valid);
  CHECK(mixed.sum == Rational(5, 6));
}

TEST_CASE("condition details") {
  // reversing the chains changes the star and can change the verdict
  const ModuliData md(0, 1, {Chain{2, 3}, Chain{2, 3}});
  const auto c3 = cond3_detail(md);
  CHECK(c3.sum_outward == Rational(6, 5));
  CHECK(c3.sum_reversed == Rational(4, 5));
  CHECK_FALSE(c3.outward_ok);
  CHECK(c3.reversed_ok);
  CHECK_FALSE(cond2_negdef(md));
  CHECK(cond2_negdef(md.with_reversed_chains()));

  const auto c4 = cond4_detail(md);
  CHECK(c4.sum == Rational(4, 5));  // duals (3,2),(3,2)
  CHECK(c4.threshold == 1);
  CHECK_FALSE(c4.ok);
}

TEST_CASE("certificate verification") {
  const ModuliData md(0, 1, {Chain{2}});  // dual chain (2)
  CHECK(verify_certificate(md, {3, {{1}}}));
  CHECK_FALSE(verify_certificate(md, {2, {{1}}}));  // 0 is not > 0
  CHECK_FALSE(verify_certificate(md, {3, {{1}, {1}}}));   // wrong shape
  CHECK_FALSE(verify_certificate(md, {3, {{1, 1}}}));     // wrong length
  CHECK_FALSE(verify_certificate(md, {0, {{1}}}));        // a must be >= 1
  CHECK_FALSE(verify_certificate(md, {3, {{0}}}));        // entries >= 1
  CHECK(verify_certificate(ModuliData(0, 2, {}), {1, {}}));
}

TEST_CASE("constructive solver") {
  const auto cert = solve_ample(ModuliData(0, 1, {Chain{2}}));
  REQUIRE(cert.has_value());
  CHECK(cert->a == 5);
  CHECK(cert->coeffs == std::vector<std::vector<Int>>{{2}});

  const auto empty = solve_ample(ModuliData(0, 2, {}));
  REQUIRE(empty.has_value());
  CHECK(empty->a == 1);
  CHECK(empty->coeffs.empty());

  CHECK_FALSE(solve_ample(ModuliData(0, 1, {Chain{2}, Chain{2}})));
  CHECK_FALSE(solve_ample(ModuliData(0, 1, {Chain{2, 3}, Chain{2, 3}})));
}

TEST_CASE("bounded search") {
  const ModuliData md(0, 1, {Chain{2}});
  // a > 2 a_1 forces a >= 3
  CHECK_FALSE(exists_certificate_bounded(md, 2));
  CHECK(exists_certificate_bounded(md, 3));
  CHECK(exists_certificate_bounded(ModuliData(0, 2, {}), 1));
  CHECK_FALSE(exists_certificate_bounded(ModuliData(0, 1, {Chain{2}, Chain{2}}), 12));
  CHECK_FALSE(exists_certificate_bounded(md, 0));
}

TEST_CASE("bounded search agrees with brute force") {
  const std::vector<Chain> pool{Chain{2}, Chain{2, 2}, Chain{3}, Chain{3, 2}};
  for (std::int64_t k = 1; k <= 2; ++k)
    for (const auto& c : pool)
      for (std::int64_t bound = 1; bound <= 6; ++bound) {
        const ModuliData md(0, k, {c});
        CHECK(exists_certificate_bounded(md, bound) ==
              brute_certificate(md, bound));
      }
  for (std::int64_t bound = 1; bound <= 5; ++bound) {
    const ModuliData md(0, 1, {Chain{2}, Chain{2, 2}});
    CHECK(exists_certificate_bounded(md, bound) ==
          brute_certificate(md, bound));
  }
}

TEST_CASE("equivalence report") {
  const auto good = equivalence_report(ModuliData(0, 1, {Chain{2}}));
  CHECK(good.cond1_found);
  CHECK(good.cond2);
  CHECK(good.cond3);
  CHECK(good.cond4);
  CHECK(good.agreement);
  CHECK(good.center_pivot == Rational(-1, 2));
  CHECK(good.search_bound == 0);  // no refutation needed

  const auto bad = equivalence_report(ModuliData(0, 1, {Chain{2}, Chain{2}}));
  CHECK_FALSE(bad.cond1_found);
  CHECK_FALSE(bad.cond2);
  CHECK_FALSE(bad.cond3);
  CHECK_FALSE(bad.cond4);
  CHECK(bad.agreement);
  CHECK(bad.center_pivot == 0);
  CHECK(bad.search_bound == 12);
  CHECK_FALSE(bad.bounded_search_found);

  const auto rev = equivalence_report(ModuliData(0, 1, {Chain{2, 3}, Chain{2, 3}}));
  CHECK_FALSE(rev.cond3);
  CHECK(rev.cond3_reversed_ok);  // the reversed star is a different datum
  CHECK(rev.agreement);
}

TEST_CASE("chain and moduli enumeration") {
  CHECK(enumerate_chains(1, 3) == std::vector<Chain>{Chain{2}, Chain{3}});
  CHECK(enumerate_chains(2, 3) ==
        std::vector<Chain>{Chain{2}, Chain{2, 2}, Chain{2, 3}, Chain{3},
                           Chain{3, 2}, Chain{3, 3}});
  int count = 0;
  EnumerationBounds tiny{1, 1, 1, 2, 12};
  enumerate_moduli(tiny, [&](const ModuliData&) { ++count; });
  CHECK(count == 2);  // no chains, or the single chain (2)

  count = 0;
  EnumerationBounds six{1, 2, 1, 3, 12};
  std::vector<std::vector<Chain>> seen;
  enumerate_moduli(six, [&](const ModuliData& md) {
    ++count;
    seen.push_back(md.chains);
  });
  CHECK(count == 6);
  CHECK(seen[0].empty());
  CHECK(seen[1] == std::vector<Chain>{Chain{2}});
  CHECK(seen[2] == std::vector<Chain>{Chain{2}, Chain{2}});
  CHECK(seen[3] == std::vector<Chain>{Chain{2}, Chain{3}});
  CHECK(seen[4] == std::vector<Chain>{Chain{3}});
  CHECK(seen[5] == std::vector<Chain>{Chain{3}, Chain{3}});
}

TEST_CASE("cross-check harness at the default bounds") {
  const auto sum = enumerate_and_crosscheck(EnumerationBounds{});
  CHECK(sum.instances == 1365);
  CHECK(sum.valid == 1061);
  CHECK(sum.invalid == 304);
  CHECK(sum.certificates == 1061);   // every valid datum got a certificate
  CHECK(sum.refutations == 304);     // every invalid one was refuted
  CHECK(sum.disagreements == 0);
  CHECK(sum.failures.empty());
  // chain reversal is *not* an invariance of condition 3; the harness only
  // counts how often the verdicts differ
  CHECK(sum.cond3_reversal_mismatches == 100);
}
