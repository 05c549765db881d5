#include "commands.hpp"

#include <fstream>
#include <future>
#include <random>
#include <sstream>

#include "superreal/group.hpp"
#include "superreal/sampling.hpp"

namespace superreal::cli {

namespace {

Json scalar_matrix_json(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json grassmann_matrix_json(const GrassmannMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json header(const RunConfig& cfg) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = cfg.command;
  return j;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

LieSuperAlgebra resolve_algebra(const RunConfig& cfg) {
  require(cfg.m >= 0, "--m must be non-negative");
  try {
    if (cfg.family == "gl" || cfg.family == "sl") {
      require(cfg.n.has_value(), "--n is required for family " + cfg.family);
      return cfg.family == "gl" ? build_gl(cfg.m, *cfg.n) : build_sl(cfg.m, *cfg.n);
    }
    if (cfg.family == "osp") {
      require(cfg.t.has_value(), "--t is required for family osp");
      return build_osp(cfg.m, 2 * *cfg.t);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family: " + cfg.family);
}

Kind resolve_kind(const std::string& s) {
  require(s == "standard" || s == "graded", "--kind must be standard or graded");
  return parse_kind(s);
}

GaussianRational parse_entry(const Json& e) {
  require(e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_string(),
          "structure entries must be [re, im] string pairs");
  try {
    return GaussianRational(parse_rational(e[0].get<std::string>()), parse_rational(e[1].get<std::string>()));
  } catch (const std::exception& ex) {
    throw UsageError(std::string("bad structure entry: ") + ex.what());
  }
}

// {"kind": ..., "matrix": [[[re, im], ...], ...]} acting on the algebra's coordinates.
RealStructureMap structure_from_file(const std::string& path, const LieSuperAlgebra& g) {
  std::ifstream in(path);
  require(in.good(), "cannot read structure file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError("structure file is not JSON: " + std::string(e.what()));
  }
  require(j.contains("kind") && j["kind"].is_string(), "structure file needs a kind");
  require(j.contains("matrix") && j["matrix"].is_array(), "structure file needs a matrix");
  const Json& rows = j["matrix"];
  require(rows.size() == g.size(), "structure matrix has the wrong size for " + g.label());
  ScalarMatrix m(g.size(), g.size());
  for (std::size_t r = 0; r < g.size(); ++r) {
    require(rows[r].is_array() && rows[r].size() == g.size(), "structure matrix row " + std::to_string(r));
    for (std::size_t c = 0; c < g.size(); ++c) m(r, c) = parse_entry(rows[r][c]);
  }
  return {m, resolve_kind(j["kind"].get<std::string>())};
}

RealStructureMap resolve_structure(const RunConfig& cfg, const LieSuperAlgebra& g) {
  try {
    if (cfg.structure == "omega") return omega_compact(g);
    if (cfg.structure == "sigma-cn") return sigma_C_n(g);
    if (cfg.structure == "entrywise") return entrywise_conjugation(g, resolve_kind(cfg.kind));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("structure " + cfg.structure + " on " + g.label() + ": " + e.what());
  }
  return structure_from_file(cfg.structure, g);
}

std::string readable(const std::string& s) {
  std::string out = s;
  for (auto& ch : out)
    if (ch == '_') ch = ' ';
  return out;
}

class ReportBuilder {
 public:
  void add(const std::string& name, bool ok, const std::string& witness = {}) {
    Json c;
    c["name"] = name;
    c["passed"] = ok;
    if (!ok && !witness.empty()) c["witness"] = witness;
    checks_.push_back(c);
    passed_ = passed_ && ok;
    ++total_;
    failed_ += !ok;
  }
  void add(const std::string& prefix, const Report& r) {
    for (const auto& c : r.checks) add(prefix + readable(c.name), c.passed, c.witness);
  }
  Json checks() const { return checks_; }
  bool passed() const { return passed_; }
  std::string summary(const std::string& what) const {
    std::ostringstream s;
    s << what << ": " << total_ - failed_ << "/" << total_ << " checks passed";
    return s.str();
  }

 private:
  Json checks_ = Json::array();
  bool passed_ = true;
  int total_ = 0;
  int failed_ = 0;
};

// One sampled identity: counts and the first counterexample in sample order.
struct Identity {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::optional<Json> counterexample;
};

struct SampleOutcome {
  std::vector<std::pair<bool, Json>> results;
};

std::uint64_t sample_seed(std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace

CommandResult cmd_build(const RunConfig& cfg) {
  LieSuperAlgebra g = resolve_algebra(cfg);
  Json j = header(cfg);
  j["algebra"] = g.label();
  j["family"] = family_name(g.family());
  j["superdimension"] = {{"even", g.even_dim()}, {"odd", g.odd_dim()}};
  j["matrix_size"] = {{"even", g.dim().even}, {"odd", g.dim().odd}};
  Json basis = Json::array();
  for (std::size_t k = 0; k < g.size(); ++k) {
    Json b;
    b["parity"] = g.parity(k);
    b["matrix"] = scalar_matrix_json(g.basis(k));
    basis.push_back(b);
  }
  j["basis"] = basis;
  Json table = Json::array();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) {
      const Vec& v = g.bracket_basis(a, b);
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero()) table.push_back({a, b, c, v[c].to_string()});
    }
  j["structure_constants"] = table;
  std::ostringstream s;
  s << g.label() << ": dimension " << g.size() << " (" << g.even_dim() << "|" << g.odd_dim() << ")";
  return {j, true, s.str()};
}

CommandResult cmd_verify(const RunConfig& cfg) {
  LieSuperAlgebra g = resolve_algebra(cfg);
  RealStructureMap phi = resolve_structure(cfg, g);
  ReportBuilder rb;
  rb.add("real structure: ", verify_real_structure(g, phi));
  std::optional<OmegaData> omega;
  try {
    omega = omega_data(g);
  } catch (const std::exception&) {
  }
  if (cfg.structure == "omega" && omega) {
    for (const auto& c : omega_generator_rules(g, omega->chevalley, phi).checks)
      rb.add("generator rules: " + readable(c.name), c.passed, c.witness);
    if (g.family() != Family::osp)
      rb.add("agrees with the negative superadjoint", phi.matrix == negative_superadjoint(g).matrix);
  }
  if (cfg.structure == "omega" || cfg.structure == "sigma-cn") {
    CompactnessReport cr = even_fixed_compactness(g, phi);
    rb.add("even fixed part: Killing form negative semidefinite", cr.negative_semidefinite);
    rb.add("even fixed part: negative definite on the derived algebra", cr.derived_negative_definite);
  }
  if (cfg.certificate) {
    try {
      CompactCertificate c = compact_certificate(g, phi);
      rb.add("certificate: consistent super Hermitian form", c.super_hermitian.passed());
      rb.add("certificate: positive definite", c.positive_definite(),
             c.definite.negative_definite ? "negative definite" : "indefinite");
      rb.add("certificate: embedding into the unitary algebra", c.embeds_in_unitary(), c.embed_witness);
    } catch (const std::exception& e) {
      rb.add("certificate: Killing-derived form available", false, e.what());
    }
  }
  if (cfg.bijection) {
    bool ok = false;
    std::string witness;
    try {
      require(omega.has_value(), "no compact structure for " + g.label());
      if (phi.kind == Kind::standard) {
        LinearAutomorphism th = psi_wedge(g, omega->omega, phi);
        ok = phi_wedge(g, omega->omega, th).matrix == phi.matrix;
      } else {
        LinearAutomorphism s = psi_vee(g, omega->omega, phi);
        ok = phi_vee(g, omega->omega, s).matrix == phi.matrix;
      }
    } catch (const std::exception& e) {
      witness = e.what();
    }
    rb.add("bijection: automorphism round trip", ok, witness);
  }
  Json j = header(cfg);
  j["algebra"] = g.label();
  j["structure"] = cfg.structure;
  j["kind"] = kind_name(phi.kind);
  j["passed"] = rb.passed();
  j["checks"] = rb.checks();
  return {j, rb.passed(), rb.summary("verify " + cfg.structure + " on " + g.label())};
}

CommandResult cmd_group_check(const RunConfig& cfg) {
  require(cfg.family == "gl", "--group must be gl");
  require(cfg.n.has_value(), "--n is required");
  require(cfg.m >= 0 && *cfg.n >= 0 && cfg.m + *cfg.n > 0, "group dimensions must be non-negative and not both zero");
  require(cfg.pairs >= 1, "--pairs must be at least 1");
  require(cfg.pairs <= cfg.max_pairs, "--pairs exceeds the maximum " + std::to_string(cfg.max_pairs));
  require(cfg.samples >= 0, "--samples must be non-negative");
  require(cfg.seed.has_value(), "--seed is required");
  require(cfg.sign == 1 || cfg.sign == -1, "--sign must be 1 or -1");
  require(cfg.jobs >= 1, "--jobs must be positive");
  Kind kind = resolve_kind(cfg.kind);
  SuperDim dim{cfg.m, *cfg.n};
  if (kind == Kind::graded) require(dim.odd % 2 == 0, "graded group structures need an even odd dimension");
  GroupRealStructure phi = kind == Kind::standard ? conjugation_structure(dim) : quaternionic_structure(dim.even, dim.odd / 2);
  ScalarMatrix h = ScalarMatrix::identity(static_cast<std::size_t>(dim.total()), 1);
  for (int k = dim.even; k < dim.total(); ++k) h(k, k) = GaussianRational::i() * cfg.sign;
  SuperHermitianForm form = SuperHermitianForm::on(dim, h);
  GrassmannSpec spec{cfg.pairs, kind};

  std::vector<std::string> names = {"factorization round trip", "factorization is unique", "structure is an involution",
                                    "structure matches the closed form", "fixed factors give a member",
                                    "unitary star binomial route", "unitary star is involutive",
                                    "unitary star is multiplicative"};
  if (kind == Kind::graded) names.push_back("unitary star two routes agree");

  auto run_sample = [&](int index) {
    Sampler smp(sample_seed(*cfg.seed, index));
    GroupPoint g{dim, smp.invertible_point(dim, spec)};
    GroupPoint other{dim, smp.invertible_point(dim, spec)};
    Json point = {{"sample", index}, {"point", grassmann_matrix_json(g.matrix)}};
    SampleOutcome out;
    FactoredPoint f = factorize_point(g);
    out.results.emplace_back(recombine(f) == g.matrix, point);
    out.results.emplace_back(factorization_kernel_dim(f, dim) == 0, point);
    GroupPoint pg = apply_group_structure(phi, g);
    out.results.emplace_back(apply_group_structure(phi, pg).matrix == g.matrix, point);
    out.results.emplace_back(pg.matrix == apply_group_structure_direct(phi, g.matrix), point);
    GrassmannMatrix hp;
    do {
      GrassmannMatrix h0 = smp.block_diagonal_matrix(dim, spec);
      hp = (h0 + phi.phi_plus(h0)).scaled(GaussianRational(mpq_class(1, 2)));
    } while (determinant(body(hp)).is_zero());
    GrassmannMatrix y0 = smp.odd_block_matrix(dim, spec);
    GrassmannMatrix y = (y0 + phi.phi_a(y0)).scaled(GaussianRational(mpq_class(1, 2)));
    GrassmannMatrix fixed = hp * exp_nilpotent(y);
    Membership mem = real_form_membership(phi, GroupPoint{dim, fixed});
    out.results.emplace_back(mem.member && mem.factors.g_plus == hp && mem.factors.y == y,
                             Json{{"sample", index}, {"point", grassmann_matrix_json(fixed)}});
    GrassmannMatrix u = unitary_star_point(g, form, kind);
    out.results.emplace_back(unitary_star_binomial(g, form, kind) == u, point);
    out.results.emplace_back(unitary_star_point(GroupPoint{dim, u}, form, kind) == g.matrix, point);
    out.results.emplace_back(
        unitary_star_point(GroupPoint{dim, g.matrix * other.matrix}, form, kind) == u * unitary_star_point(other, form, kind),
        point);
    if (kind == Kind::graded)
      out.results.emplace_back(
          star_then_inverse(g.matrix, form, kind) == u && inverse_then_star(g.matrix, form, kind) == u, point);
    return out;
  };

  std::vector<SampleOutcome> outcomes(static_cast<std::size_t>(cfg.samples));
  if (cfg.jobs == 1) {
    for (int i = 0; i < cfg.samples; ++i) outcomes[static_cast<std::size_t>(i)] = run_sample(i);
  } else {
    for (int start = 0; start < cfg.samples; start += cfg.jobs) {
      std::vector<std::future<SampleOutcome>> batch;
      for (int i = start; i < std::min(cfg.samples, start + cfg.jobs); ++i)
        batch.push_back(std::async(std::launch::async, run_sample, i));
      for (std::size_t k = 0; k < batch.size(); ++k) outcomes[static_cast<std::size_t>(start) + k] = batch[k].get();
    }
  }

  std::vector<Identity> ids;
  for (const auto& n : names) ids.push_back(Identity{n, 0, 0, std::nullopt});
  for (const auto& o : outcomes)
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (o.results[k].first) {
        ++ids[k].passed;
      } else {
        ++ids[k].failed;
        if (!ids[k].counterexample) ids[k].counterexample = o.results[k].second;
      }
    }

  bool ok = true;
  Json checks = Json::array();
  for (const auto& id : ids) {
    Json c;
    c["name"] = id.name;
    c["passed"] = id.passed;
    c["failed"] = id.failed;
    if (id.counterexample) c["first_counterexample"] = *id.counterexample;
    checks.push_back(c);
    ok = ok && id.failed == 0;
  }
  Json j = header(cfg);
  j["group"] = "GL(" + std::to_string(dim.even) + "|" + std::to_string(dim.odd) + ")";
  j["kind"] = kind_name(kind);
  j["pairs"] = cfg.pairs;
  j["seed"] = *cfg.seed;
  j["samples"] = cfg.samples;
  j["form_sign"] = cfg.sign;
  j["passed"] = ok;
  j["checks"] = checks;
  std::ostringstream s;
  s << "group-check " << j["group"].get<std::string>() << " " << kind_name(kind) << ":";
  for (const auto& id : ids) s << "\n  " << id.name << " " << id.passed << "/" << id.passed + id.failed;
  return {j, ok, s.str()};
}

}  // namespace superreal::cli
