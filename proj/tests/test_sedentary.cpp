#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "qwsed/qwsed.hpp"

using namespace qwsed;

namespace {

constexpr double pi = std::numbers::pi;

WeightedGraph fam(family f, nlohmann::json params = nlohmann::json::object()) {
  return build({f, std::move(params)});
}

ClassifyOptions fast() {
  ClassifyOptions o;
  o.evidence_scan = false;
  return o;
}

}  // namespace

TEST_CASE("projection heavy certificate") {
  // odd path with a light end edge: the end vertex soaks up the nullspace
  WeightedGraph wp = fam(family::weighted_end_path, {{"n", 5}, {"alpha", 2.0}});
  SpectralDecomposition s = eigendecompose(wp);
  auto c = projection_heavy(s, support(s, 0));
  REQUIRE(c.has_value());
  CHECK(c->data.at("diagonal").get<double>() == Catch::Approx(2.0 / 3.0).margin(1e-9));
  CHECK(projection_heavy_bound(*c) == Catch::Approx(1.0 / 3.0).margin(1e-9));

  WeightedGraph wc = fam(family::weighted_c4k, {{"k", 2}, {"alpha", 3.0}});
  SpectralDecomposition sc = eigendecompose(wc);
  auto cc = projection_heavy(sc, support(sc, 1));
  REQUIRE(cc.has_value());
  CHECK(cc->data.at("diagonal").get<double>() >= 0.75 - 1e-9);
  CHECK(projection_heavy_bound(*cc) >= 0.5 - 1e-9);

  SpectralDecomposition c4 = eigendecompose(fam(family::cycle, {{"n", 4}}));
  CHECK_FALSE(projection_heavy(c4, support(c4, 0)).has_value());
}

TEST_CASE("half case parity on cocktail parties") {
  for (int m : {3, 4}) {
    WeightedGraph g = fam(family::cocktail_party, {{"m", m}});
    SpectralDecomposition s = eigendecompose(g);
    VertexProfile prof = support(s, 0);
    int zi = s.zero_index();
    REQUIRE(zi >= 0);
    CHECK(prof.diagonal_at(zi) == Catch::Approx(0.5).margin(1e-9));
    HalfCaseResult r = half_case_parity(s, prof, zi);
    REQUIRE(r.status.has_value());
    if (m == 3)
      CHECK(*r.status == verdict_status::sedentary);  // nu2(4) != nu2(2)
    else
      CHECK(*r.status == verdict_status::not_sedentary);  // nu2(6) == nu2(2)
    CHECK(r.certificate.data.at("route") == "nu2-exact");
  }

  SpectralDecomposition s = eigendecompose(fam(family::cocktail_party, {{"m", 3}}));
  VertexProfile prof = support(s, 0);
  CHECK_THROWS_AS(half_case_parity(s, prof, 0), error);  // top eigenvalue is not a half case
}

TEST_CASE("half case with unrecognized support stays undecided") {
  // complete graph minus an edge: the endpoint has support {0, quartic pair}
  WeightedGraph g = fam(family::complete_minus_edge, {{"n", 4}});
  SpectralDecomposition s = eigendecompose(g);
  VertexProfile prof = support(s, 0);
  int zi = s.zero_index();
  REQUIRE(zi >= 0);
  REQUIRE(prof.diagonal_at(zi) == Catch::Approx(0.5).margin(1e-9));
  HalfCaseResult r = half_case_parity(s, prof, zi);
  CHECK_FALSE(r.status.has_value());
  CHECK(r.certificate.data.at("route") == "bounded-relation-search");

  Verdict v = classify_vertex(g, s, 0, fast());
  CHECK(v.inconclusive());
}

TEST_CASE("half case decides the leaf of a 3-path exactly") {
  WeightedGraph p3 = fam(family::path, {{"n", 3}});
  SpectralDecomposition s = eigendecompose(p3);
  Verdict v = classify_vertex(p3, s, 0, fast());
  CHECK(v.not_sedentary());
  CHECK(v.certificate.kind == certificate_kind::half_case_parity);
}

TEST_CASE("bipartite zero-free certificate") {
  WeightedGraph p4 = fam(family::path, {{"n", 4}});
  SpectralDecomposition sp = eigendecompose(p4);
  CHECK(bipartite_zero_free(p4, sp, support(sp, 0)).has_value());

  WeightedGraph g3 = fam(family::subdivided_star, {{"m", 3}});
  SpectralDecomposition sg = eigendecompose(g3);
  CHECK(bipartite_zero_free(g3, sg, support(sg, 1)).has_value());   // degree-2 middle
  CHECK_FALSE(bipartite_zero_free(g3, sg, support(sg, 0)).has_value());  // center has 0

  WeightedGraph c3 = fam(family::cycle, {{"n", 3}});
  SpectralDecomposition sc = eigendecompose(c3);
  CHECK_FALSE(bipartite_zero_free(c3, sc, support(sc, 0)).has_value());
}

TEST_CASE("unique perfect matching and even eigenvalue count certificates") {
  WeightedGraph k2 = fam(family::complete, {{"n", 2}});
  WeightedGraph tk2 = rooted_product(fam(family::path, {{"n", 3}}), {{k2, 0}, {k2, 0}, {k2, 0}});
  auto c1 = unique_pm(tk2, eigendecompose(tk2));
  REQUIRE(c1.has_value());
  CHECK(c1->kind == certificate_kind::unique_perfect_matching);

  WeightedGraph p6 = fam(family::path, {{"n", 6}});
  auto c2 = unique_pm(p6, eigendecompose(p6));
  REQUIRE(c2.has_value());
  CHECK(c2->kind == certificate_kind::unique_perfect_matching);

  WeightedGraph c4 = fam(family::cycle, {{"n", 4}});
  CHECK_FALSE(unique_pm(c4, eigendecompose(c4)).has_value());  // 2 matchings, 3 eigenvalues

  WeightedGraph c6 = fam(family::cycle, {{"n", 6}});
  auto c3 = unique_pm(c6, eigendecompose(c6));
  REQUIRE(c3.has_value());
  CHECK(c3->kind == certificate_kind::even_distinct_eigenvalues);
}

TEST_CASE("zero-in-support tests") {
  WeightedGraph g3 = fam(family::subdivided_star, {{"m", 3}});
  SpectralDecomposition s3 = eigendecompose(g3);
  auto f = cor18_tests(s3, support(s3, 0));
  REQUIRE(f.has_value());
  CHECK(f->certificate.kind == certificate_kind::single_positive);
  REQUIRE(f->witness_time.has_value());
  CHECK(walk_diagonal(s3, 0, *f->witness_time).real() <= 1e-9);

  WeightedGraph g8 = fam(family::subdivided_star, {{"m", 8}});
  SpectralDecomposition s8 = eigendecompose(g8);
  auto f8 = cor18_tests(s8, support(s8, 9));  // a leaf; positive support {1, 3}
  REQUIRE(f8.has_value());
  CHECK(f8->certificate.kind == certificate_kind::equal_two_adic);

  WeightedGraph g2 = fam(family::subdivided_star, {{"m", 2}});
  SpectralDecomposition s2 = eigendecompose(g2);
  auto f2 = cor18_tests(s2, support(s2, 3));  // a leaf; positive support {1, sqrt3}
  REQUIRE(f2.has_value());
  CHECK(f2->certificate.kind == certificate_kind::linear_independent);
  CHECK(f2->certificate.data.at("evidence") == "exact-forms");

  // P_7 odd vertex: positive support is unrecognized but relation-free
  WeightedGraph p7 = fam(family::path, {{"n", 7}});
  SpectralDecomposition s7 = eigendecompose(p7);
  auto f7 = cor18_tests(s7, support(s7, 0));
  REQUIRE(f7.has_value());
  CHECK(f7->certificate.kind == certificate_kind::linear_independent);
  CHECK(f7->certificate.data.at("evidence") == "bounded");

  SpectralDecomposition sp3 = eigendecompose(fam(family::path, {{"n", 3}}));
  CHECK_THROWS_AS(cor18_tests(sp3, support(sp3, 1)), error);  // 0 not in middle support
}

namespace {

// hand-built decomposition: only eigenvalues and the profile feed the
// subset search, so projectors can stay empty
SpectralDecomposition synthetic_decomposition(std::vector<double> eigenvalues) {
  SpectralDecomposition s;
  s.n = static_cast<int>(eigenvalues.size());
  s.eigenvalues = std::move(eigenvalues);
  s.multiplicities.assign(s.eigenvalues.size(), 1);
  s.cluster_tol = 1e-8;
  return s;
}

VertexProfile synthetic_profile(const SpectralDecomposition& s, std::vector<double> diagonals) {
  VertexProfile p;
  p.vertex = 0;
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    p.support.push_back(static_cast<int>(i));
    p.diagonals.push_back(diagonals[i]);
  }
  return p;
}

}  // namespace

TEST_CASE("kronecker subset certificate") {
  // positive support {9, 6, 2}; S = {6, 2} reaches mass 1/4 first, zeta = pi,
  // the relation lattice is generated by (1, -3) with even signed sums
  SpectralDecomposition s = synthetic_decomposition({9, 6, 2, 0, -2, -6, -9});
  VertexProfile p = synthetic_profile(s, {0.075, 0.125, 0.125, 0.35, 0.125, 0.125, 0.075});
  auto cert = kronecker_subset(s, p);
  REQUIRE(cert.has_value());
  CHECK(cert->subset_s == std::vector<int>{1, 2});
  CHECK(cert->alpha_mass == Catch::Approx(0.25).margin(1e-12));
  CHECK(cert->zeta == Catch::Approx(pi).margin(1e-9));
  REQUIRE(cert->zeta_rational);
  CHECK(cert->zeta_a == 1);
  CHECK(cert->zeta_b == 1);
  REQUIRE_FALSE(cert->relation_audit.empty());
  CHECK(cert->relation_audit[0].at("relation") == std::vector<long long>{1, -3});

  // Q-linearly independent subset: certificate with an empty audit
  SpectralDecomposition s2 = synthetic_decomposition({std::sqrt(3.0), std::sqrt(2.0), 0,
                                                      -std::sqrt(2.0), -std::sqrt(3.0)});
  VertexProfile p2 = synthetic_profile(s2, {0.13, 0.13, 0.48, 0.13, 0.13});
  auto cert2 = kronecker_subset(s2, p2);
  REQUIRE(cert2.has_value());
  CHECK(cert2->relation_audit.empty());

  // no subset reaches mass 1/4
  SpectralDecomposition s3 = synthetic_decomposition({5, 3, 0, -3, -5});
  VertexProfile p3 = synthetic_profile(s3, {0.05, 0.06, 0.45, 0.22, 0.22});
  CHECK_FALSE(kronecker_subset(s3, p3).has_value());

  // singleton subsets carry an exact witness time
  WeightedGraph g3 = fam(family::subdivided_star, {{"m", 3}});
  SpectralDecomposition sg = eigendecompose(g3);
  auto leaf_cert = kronecker_subset(sg, support(sg, 4));  // leaf: positive {2, 1}
  REQUIRE(leaf_cert.has_value());
  REQUIRE(leaf_cert->exact_witness.has_value());
  CHECK(walk_diagonal(sg, 4, *leaf_cert->exact_witness).real() <= 1e-9);
}

TEST_CASE("pendant group certificates") {
  // unweighted star: all three leaves via the twin route
  WeightedGraph k13 = fam(family::star, {{"n", 3}});
  auto findings = pendant_group(k13, eigendecompose(k13));
  REQUIRE(findings.size() == 3);
  for (const auto& f : findings) {
    CHECK(f.certificate.kind == certificate_kind::twin_set_large);
    CHECK(f.lower_bound == Catch::Approx(1.0 / 3.0).margin(1e-9));
  }

  // two pendants with unequal weights: only the lighter leaf fires
  WeightedGraph ws = fam(family::weighted_star, {{"n", 2}, {"alpha", 2.0}});
  auto wf = pendant_group(ws, eigendecompose(ws));
  REQUIRE(wf.size() == 1);
  CHECK(wf[0].vertex == 1);
  CHECK(wf[0].lower_bound == Catch::Approx(2.0 * 0.8 - 1.0).margin(1e-9));

  // equal weights on a bare star: state transfer, nothing fires
  WeightedGraph p3 = fam(family::path, {{"n", 3}});
  CHECK(pendant_group(p3, eigendecompose(p3)).empty());

  // equal weights with extra nullspace: both pendants fire
  WeightedGraph g5 = fam(family::pendant_path_gn, {{"n", 5}});
  auto gf = pendant_group(g5, eigendecompose(g5));
  REQUIRE(gf.size() == 2);
  CHECK(gf[0].vertex == 0);
  CHECK(gf[1].vertex == 5);
  CHECK(gf[0].lower_bound == Catch::Approx(0.2).margin(1e-9));

  // weighted triple: at least two leaves get proof bounds above 1/2
  WeightedGraph wk13 = from_edge_list(4, {{0, 1, 1.0}, {0, 2, 0.5}, {0, 3, 1.5}});
  auto tf = pendant_group(wk13, eigendecompose(wk13));
  CHECK(tf.size() >= 2);
  for (const auto& f : tf) CHECK(f.lower_bound > 0.0);

  WeightedGraph p4 = fam(family::path, {{"n", 4}});
  CHECK_THROWS_AS(pendant_group(p4, eigendecompose(p4)), error);
}

TEST_CASE("classify_vertex cascade examples") {
  WeightedGraph k13 = fam(family::star, {{"n", 3}});
  SpectralDecomposition s13 = eigendecompose(k13);
  Verdict leaf = classify_vertex(k13, s13, 1, fast());
  CHECK(leaf.sedentary());
  CHECK(leaf.certificate.kind == certificate_kind::twin_set_large);
  CHECK(*leaf.lower_bound == Catch::Approx(1.0 / 3.0).margin(1e-9));

  WeightedGraph p4 = fam(family::path, {{"n", 4}});
  SpectralDecomposition s4 = eigendecompose(p4);
  for (int u = 0; u < 4; ++u) {
    Verdict v = classify_vertex(p4, s4, u, fast());
    CHECK(v.not_sedentary());
    CHECK(v.certificate.kind == certificate_kind::unique_perfect_matching);
  }

  WeightedGraph g3 = fam(family::subdivided_star, {{"m", 3}});
  SpectralDecomposition s3 = eigendecompose(g3);
  Verdict center = classify_vertex(g3, s3, 0, fast());
  CHECK(center.not_sedentary());
  CHECK(center.certificate.kind == certificate_kind::single_positive);

  WeightedGraph disconnected = from_edge_list(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  SpectralDecomposition sd = eigendecompose(disconnected);
  CHECK_THROWS_AS(classify_vertex(disconnected, sd, 0, fast()), error);
}

TEST_CASE("numeric scan minima") {
  WeightedGraph k5 = fam(family::complete, {{"n", 5}});
  SpectralDecomposition s5 = eigendecompose(k5);
  ScanResult r5 = numeric_scan(s5, 0);
  CHECK(r5.period_exact);
  CHECK(r5.horizon == Catch::Approx(2.0 * pi / 5.0).margin(1e-9));
  CHECK(r5.global_min == Catch::Approx(0.6).margin(1e-6));
  CHECK(r5.argmin == Catch::Approx(pi / 5.0).margin(1e-3));
  CHECK(r5.magnitudes.front() == Catch::Approx(1.0).margin(1e-12));

  WeightedGraph sh = fam(family::shrikhande);
  SpectralDecomposition ss = eigendecompose(sh);
  ScanResult rs = numeric_scan(ss, 0);
  CHECK(rs.global_min == Catch::Approx(0.25).margin(1e-6));
  CHECK(rs.argmin == Catch::Approx(pi / 4.0).margin(1e-3));

  WeightedGraph g5 = fam(family::pendant_path_gn, {{"n", 5}});
  SpectralDecomposition sg = eigendecompose(g5);
  ScanOptions near, far;
  near.horizon = 200.0;
  far.horizon = 2000.0;
  ScanResult rn = numeric_scan(sg, 5, near);
  ScanResult rf = numeric_scan(sg, 5, far);
  CHECK(rn.global_min >= 0.2 - 1e-6);
  CHECK(rf.global_min >= 0.2 - 1e-6);
  CHECK(rf.global_min <= rn.global_min + 1e-9);
  CHECK(rf.global_min <= 0.22);
}

TEST_CASE("periodic scans are exact over one period") {
  for (auto spec : {FamilySpec{family::cycle, {{"n", 4}}},
                    FamilySpec{family::complete, {{"n", 5}}},
                    FamilySpec{family::cocktail_party, {{"m", 3}}}}) {
    WeightedGraph g = build(spec);
    SpectralDecomposition s = eigendecompose(g);
    PeriodicityReport per = periodicity(s, 0);
    REQUIRE(per.periodic);
    ScanOptions one, three;
    one.horizon = *per.period;
    one.use_period = false;
    three.horizon = 3.0 * *per.period;
    three.use_period = false;
    double m1 = numeric_scan(s, 0, one).global_min;
    double m3 = numeric_scan(s, 0, three).global_min;
    CHECK(std::abs(m1 - m3) <= 1e-9);
  }
}

TEST_CASE("cartesian verdict combination") {
  Verdict sed;
  sed.status = verdict_status::sedentary;
  sed.lower_bound = 1.0 / 3.0;
  Verdict notsed;
  notsed.status = verdict_status::not_sedentary;
  Verdict inc;
  inc.status = verdict_status::inconclusive;

  Verdict both = cartesian_classify(sed, sed);
  CHECK(both.sedentary());
  CHECK(*both.lower_bound == Catch::Approx(1.0 / 9.0).margin(1e-12));
  CHECK(both.certificate.kind == certificate_kind::cartesian_combine);

  CHECK(cartesian_classify(sed, notsed).not_sedentary());
  CHECK(cartesian_classify(notsed, inc).not_sedentary());
  CHECK(cartesian_classify(sed, inc).inconclusive());
}

TEST_CASE("double transfer rules") {
  // zero outside the support: copies are not sedentary
  WeightedGraph k5 = fam(family::complete, {{"n", 5}});
  SpectralDecomposition s5 = eigendecompose(k5);
  Verdict base5 = classify_vertex(k5, s5, 0, fast());
  Verdict d5 = double_classify(k5, s5, 0, base5, fast());
  CHECK(d5.not_sedentary());
  CHECK(d5.certificate.kind == certificate_kind::double_transfer);

  // half-diagonal transfer keeps the source status
  WeightedGraph ck3 = fam(family::cocktail_party, {{"m", 3}});
  SpectralDecomposition sc = eigendecompose(ck3);
  Verdict basec = classify_vertex(ck3, sc, 0, fast());
  REQUIRE(basec.sedentary());
  Verdict dc = double_classify(ck3, sc, 0, basec, fast());
  CHECK(dc.sedentary());
  REQUIRE(dc.lower_bound.has_value());
  CHECK(*dc.lower_bound > 0.0);

  // nonsingular odd weighted cycle: the double (a weighted C_10) is not
  // sedentary at any copy
  WeightedGraph c5 = from_edge_list(
      5, {{0, 1, 0.7}, {1, 2, -1.3}, {2, 3, 0.9}, {3, 4, 1.1}, {4, 0, 0.5}});
  SpectralDecomposition s5w = eigendecompose(c5);
  REQUIRE(s5w.zero_index() < 0);
  Verdict base = classify_vertex(c5, s5w, 2, fast());
  Verdict dbl = double_classify(c5, s5w, 2, base, fast());
  CHECK(dbl.not_sedentary());

  WeightedGraph p4 = fam(family::path, {{"n", 4}});
  SpectralDecomposition sp = eigendecompose(p4);
  CHECK_THROWS_AS(double_classify(p4, sp, 0, base5, fast()), error);
}

TEST_CASE("no vertex collects both sedentary and not-sedentary certificates") {
  ClassifyOptions opts = fast();
  for (const FamilySpec& spec : builtin_corpus()) {
    WeightedGraph g = build(spec);
    if (g.n > 16) continue;
    SpectralDecomposition s = eigendecompose(g);
    auto bip = bipartition(g);
    int zi = s.zero_index();
    std::vector<PendantFinding> pend;
    if (!pendant_groups(g).empty()) pend = pendant_group(g, s);
    std::optional<Certificate> graph_cert;
    if (bip) graph_cert = unique_pm(g, s);
    for (int u = 0; u < g.n; ++u) {
      VertexProfile prof = support(s, u);
      bool zero_in = zi >= 0 && prof.contains(zi);
      double e0 = zero_in ? prof.diagonal_at(zi) : 0.0;

      bool sed_fire = false, notsed_fire = false;
      if (g.is_unweighted())
        for (const TwinSet& w : twin_sets(g))
          if (w.members.size() >= 3 &&
              std::find(w.members.begin(), w.members.end(), u) != w.members.end())
            sed_fire = true;
      if (projection_heavy(s, prof)) sed_fire = true;
      for (const auto& f : pend)
        if (f.vertex == u) sed_fire = true;
      if (graph_cert) notsed_fire = true;
      if (bip && bipartite_zero_free(g, s, prof)) notsed_fire = true;
      if (bip && zero_in && e0 < 0.5 - opts.half_tol) {
        if (cor18_tests(s, prof, opts)) notsed_fire = true;
        int positives = 0;
        for (int idx : prof.support) positives += s.eigenvalues[idx] > s.cluster_threshold();
        if (positives <= 6 && kronecker_subset(s, prof, opts)) notsed_fire = true;
      }
      for (std::size_t i = 0; i < prof.support.size(); ++i) {
        if (std::abs(prof.diagonals[i] - 0.5) > opts.half_tol) continue;
        HalfCaseResult r = half_case_parity(s, prof, prof.support[i], opts);
        if (r.status == verdict_status::sedentary) sed_fire = true;
        if (r.status == verdict_status::not_sedentary) notsed_fire = true;
      }
      INFO(spec.str() << " vertex " << u);
      CHECK_FALSE((sed_fire && notsed_fire));
    }
  }
}

TEST_CASE("witness times and certified bounds are sound on the corpus") {
  ClassifyOptions opts = fast();
  for (const FamilySpec& spec : builtin_corpus()) {
    WeightedGraph g = build(spec);
    if (g.n > 16) continue;
    SpectralDecomposition s = eigendecompose(g);
    for (const Verdict& v : classify_all(g, s, opts)) {
      INFO(spec.str() << " vertex " << v.vertex);
      if (v.witness_time) CHECK(walk_diagonal(s, v.vertex, *v.witness_time).real() <= 1e-9);
      if (v.sedentary()) {
        REQUIRE(v.lower_bound.has_value());
        CHECK(*v.lower_bound > 0.0);
        CHECK(*v.lower_bound <= 1.0);
      }
    }
  }
}

TEST_CASE("cocktail party statuses by parity of m") {
  for (int m = 3; m <= 8; ++m) {
    WeightedGraph g = fam(family::cocktail_party, {{"m", m}});
    SpectralDecomposition s = eigendecompose(g);
    Verdict v = classify_vertex(g, s, 0, fast());
    if (m % 2 == 1)
      CHECK(v.sedentary());
    else
      CHECK(v.not_sedentary());
  }
}
