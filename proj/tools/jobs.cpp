#include <array>
#include "jobs.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "psharm/errors.hpp"
#include "psharm/ladder.hpp"
#include "psharm/molfile.hpp"
#include "psharm/oracle.hpp"
#include "psharm/spectrum.hpp"
#include "psharm/version.hpp"
#include "psharm/wavefunction.hpp"

namespace psharm::cli {

using ordered_json = nlohmann::ordered_json;

std::string format_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

struct Resolved {
  CoefficientSet coeffs;
  std::string source;  // human-readable provenance for the report header
};

Resolved resolve_coefficients(const JobSpec& job) {
  const int sources = int(job.inline_coeffs.has_value()) +
                      int(job.molecular.has_value()) +
                      int(!job.molecule_file.empty());
  if (sources != 1)
    throw std::domain_error(
        "coefficient source: exactly one of --a1/--a2/--a3, --De/--re, or "
        "--molecules/--molecule must be given");

  Resolved r;
  if (job.inline_coeffs) {
    r.coeffs = *job.inline_coeffs;
    if (job.units) r.coeffs.units = *job.units;
    r.source = "inline coefficients";
  } else if (job.molecular) {
    r.coeffs = from_molecular(*job.molecular,
                              job.units.value_or(UnitSystem{}));
    r.source = "molecular De/re";
  } else {
    if (job.molecule_key.empty())
      throw std::domain_error("molecule source: --molecule KEY is required");
    const auto records = load_molecules(job.molecule_file);
    const auto it = records.find(job.molecule_key);
    if (it == records.end())
      throw std::domain_error("molecule source: unknown molecule key '" +
                              job.molecule_key + "'");
    r.coeffs = from_molecular(it->second.params,
                              job.units.value_or(it->second.units));
    r.source = "molecule '" + job.molecule_key + "' from " + job.molecule_file;
  }
  return r;
}

void require_format(const JobSpec& job) {
  if (job.format != "csv" && job.format != "json" && job.format != "pretty")
    throw std::domain_error("format: must be one of csv, json, pretty");
}

ordered_json units_json(const UnitSystem& u) {
  return ordered_json{{"hbar", u.hbar}, {"mass", u.mass}};
}

ordered_json meta_json(const JobSpec& job, const Resolved& r,
                       const char* command) {
  ordered_json meta;
  meta["tool"] = "psharm";
  meta["version"] = version_string;
  meta["command"] = command;
  ordered_json inputs;
  inputs["a1"] = r.coeffs.a1;
  inputs["a2"] = r.coeffs.a2;
  inputs["a3"] = r.coeffs.a3;
  inputs["source"] = r.source;
  inputs["n_max"] = job.n_max;
  inputs["ell_max"] = job.ell_max;
  inputs["dims"] = job.dims;
  meta["inputs"] = inputs;
  meta["units"] = units_json(r.coeffs.units);
  return meta;
}

void emit(const JobSpec& job, std::ostream& fallback,
          const std::string& text) {
  if (job.out_path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream out(job.out_path, std::ios::binary);
  if (!out)
    throw std::domain_error("out: cannot open '" + job.out_path +
                            "' for writing");
  out << text;
}

// ---------------------------------------------------------------- spectrum

int run_spectrum(const JobSpec& job, std::ostream& out) {
  const Resolved r = resolve_coefficients(job);
  const auto table =
      spectrum::level_table(r.coeffs, job.n_max, job.ell_max, job.dims);

  std::ostringstream text;
  if (job.format == "csv") {
    text << "n,ell,dim,energy,epsilon_sq\n";
    for (const auto& lv : table)
      text << lv.qn.n << ',' << lv.qn.ell << ',' << lv.qn.dim << ','
           << format_sig12(lv.energy) << ',' << format_sig12(lv.epsilon_sq)
           << '\n';
  } else if (job.format == "json") {
    ordered_json doc;
    doc["meta"] = meta_json(job, r, "spectrum");
    ordered_json data = ordered_json::array();
    for (const auto& lv : table)
      data.push_back(ordered_json{{"n", lv.qn.n},
                                  {"ell", lv.qn.ell},
                                  {"dim", lv.qn.dim},
                                  {"energy", lv.energy},
                                  {"epsilon_sq", lv.epsilon_sq}});
    doc["data"] = data;
    text << doc.dump(2) << '\n';
  } else {
    text << "# psharm " << version_string << " spectrum (" << r.source
         << ")\n";
    text << "# a1=" << format_sig12(r.coeffs.a1)
         << " a2=" << format_sig12(r.coeffs.a2)
         << " a3=" << format_sig12(r.coeffs.a3)
         << " hbar=" << format_sig12(r.coeffs.units.hbar)
         << " mass=" << format_sig12(r.coeffs.units.mass) << "\n";
    text << std::setw(4) << "n" << std::setw(5) << "ell" << std::setw(5)
         << "dim" << std::setw(20) << "energy" << std::setw(20)
         << "epsilon_sq" << '\n';
    for (const auto& lv : table)
      text << std::setw(4) << lv.qn.n << std::setw(5) << lv.qn.ell
           << std::setw(5) << lv.qn.dim << std::setw(20)
           << format_sig12(lv.energy) << std::setw(20)
           << format_sig12(lv.epsilon_sq) << '\n';
  }
  emit(job, out, text.str());
  return exit_ok;
}

// ------------------------------------------------------------ wavefunction

int run_wavefunction(const JobSpec& job, std::ostream& out) {
  if (job.dims.size() != 1)
    throw std::domain_error("wavefunction: exactly one --dims value");
  if (job.samples < 2)
    throw std::domain_error("samples: need at least 2");
  const Resolved r = resolve_coefficients(job);
  const QuantumNumbers qn{job.n, job.ell, job.dims.front()};
  const auto s = radial::make_state(r.coeffs, qn);
  const double r_hi =
      job.r_max > 0.0 ? job.r_max : radial::suggested_r_max(s);
  const double nm1 = qn.dim - 1.0;

  std::vector<std::array<double, 3>> rows(job.samples);
  for (int i = 0; i < job.samples; ++i) {
    const double rr = r_hi * (i + 1.0) / job.samples;
    const double val = radial::eval_r(s, rr);
    rows[i] = {rr, val, std::pow(rr, nm1) * val * val};
  }

  std::ostringstream text;
  if (job.format == "csv") {
    text << "r,R,r_pow_Nm1_R_sq\n";
    for (const auto& row : rows)
      text << format_sig12(row[0]) << ',' << format_sig12(row[1]) << ','
           << format_sig12(row[2]) << '\n';
  } else if (job.format == "json") {
    ordered_json doc;
    doc["meta"] = meta_json(job, r, "wavefunction");
    doc["meta"]["inputs"]["n"] = qn.n;
    doc["meta"]["inputs"]["ell"] = qn.ell;
    doc["meta"]["inputs"]["dim"] = qn.dim;
    doc["meta"]["norm_const"] = s.norm_const;
    ordered_json data = ordered_json::array();
    for (const auto& row : rows)
      data.push_back(ordered_json{
          {"r", row[0]}, {"R", row[1]}, {"r_pow_Nm1_R_sq", row[2]}});
    doc["data"] = data;
    text << doc.dump(2) << '\n';
  } else {
    text << "# psharm " << version_string << " wavefunction n=" << qn.n
         << " ell=" << qn.ell << " dim=" << qn.dim << " ("
         << r.source << ")\n";
    text << "# norm_const=" << format_sig12(s.norm_const) << "\n";
    text << std::setw(18) << "r" << std::setw(20) << "R" << std::setw(22)
         << "r^(N-1) R^2" << '\n';
    for (const auto& row : rows)
      text << std::setw(18) << format_sig12(row[0]) << std::setw(20)
           << format_sig12(row[1]) << std::setw(22) << format_sig12(row[2])
           << '\n';
  }
  emit(job, out, text.str());
  return exit_ok;
}

// ----------------------------------------------------------------- ladder

int run_ladder(const JobSpec& job, std::ostream& out) {
  const Resolved r = resolve_coefficients(job);
  const int n_top = std::max(job.n_max, 5);

  struct Entry {
    int dim, ell;
    double eta;
    std::vector<std::array<double, 3>> lambdas;  // n, lambda_minus, lambda_plus
    double commutator_residual;
    double casimir_value;
    double casimir_deviation;
  };
  std::vector<Entry> entries;
  for (int dim : job.dims) {
    for (int ell = 0; ell <= job.ell_max; ++ell) {
      Entry e;
      e.dim = dim;
      e.ell = ell;
      e.eta = reduce(r.coeffs, {0, ell, dim}).eta;
      for (int n = 0; n <= n_top; ++n)
        e.lambdas.push_back({double(n), ladder::lambda_minus(n, e.eta),
                             ladder::lambda_plus(n, e.eta)});
      const ladder::LadderCoeffs ctx{e.eta, dim};
      double worst = 0.0;
      double casimir_dev = 0.0;
      for (int n = 0; n <= n_top; ++n) {
        const auto v = ladder::BasisVector::basis(ctx, n);
        for (auto pair :
             {ladder::CommutatorPair::mp, ladder::CommutatorPair::zp,
              ladder::CommutatorPair::mz, ladder::CommutatorPair::za,
              ladder::CommutatorPair::zs}) {
          const auto [lhs, rhs] = ladder::commutator_check(pair, v);
          worst = std::max(worst,
                           ladder::BasisVector::max_abs_diff(lhs, rhs) /
                               std::max(1.0, rhs.max_abs()));
        }
        const auto cv = ladder::casimir(v);
        casimir_dev = std::max(
            casimir_dev, std::abs(cv.at(n) - ladder::casimir_eigenvalue(e.eta)));
      }
      e.commutator_residual = worst;
      e.casimir_value = ladder::casimir_eigenvalue(e.eta);
      e.casimir_deviation = casimir_dev;
      entries.push_back(std::move(e));
    }
  }

  std::ostringstream text;
  if (job.format == "csv") {
    text << "dim,ell,eta,n,lambda_minus,lambda_plus\n";
    for (const auto& e : entries)
      for (const auto& row : e.lambdas)
        text << e.dim << ',' << e.ell << ',' << format_sig12(e.eta) << ','
             << int(row[0]) << ',' << format_sig12(row[1]) << ','
             << format_sig12(row[2]) << '\n';
  } else if (job.format == "json") {
    ordered_json doc;
    doc["meta"] = meta_json(job, r, "ladder");
    ordered_json data = ordered_json::array();
    for (const auto& e : entries) {
      ordered_json je;
      je["dim"] = e.dim;
      je["ell"] = e.ell;
      je["eta"] = e.eta;
      ordered_json lam = ordered_json::array();
      for (const auto& row : e.lambdas)
        lam.push_back(ordered_json{{"n", int(row[0])},
                                   {"lambda_minus", row[1]},
                                   {"lambda_plus", row[2]}});
      je["lambda"] = lam;
      je["commutator_residual"] = e.commutator_residual;
      je["casimir_eigenvalue"] = e.casimir_value;
      je["casimir_deviation"] = e.casimir_deviation;
      data.push_back(je);
    }
    doc["data"] = data;
    text << doc.dump(2) << '\n';
  } else {
    text << "# psharm " << version_string << " ladder report (" << r.source
         << ")\n";
    for (const auto& e : entries) {
      text << "dim=" << e.dim << " ell=" << e.ell
           << " eta=" << format_sig12(e.eta)
           << " casimir=" << format_sig12(e.casimir_value)
           << " commutator_residual=" << format_sig12(e.commutator_residual)
           << '\n';
      for (const auto& row : e.lambdas)
        text << "  n=" << int(row[0])
             << "  lambda-=" << format_sig12(row[1])
             << "  lambda+=" << format_sig12(row[2]) << '\n';
    }
  }
  emit(job, out, text.str());
  return exit_ok;
}

// ----------------------------------------------------------------- verify

ordered_json tolerances_json(const verify::Tolerances& t) {
  return ordered_json{{"normalization", t.normalization},
                      {"orthogonality", t.orthogonality},
                      {"residual_exact", t.residual_exact},
                      {"residual_detuned", t.residual_detuned},
                      {"ladder_pointwise", t.ladder_pointwise},
                      {"algebra", t.algebra},
                      {"oracle_rel", t.oracle_rel}};
}

int run_verify(const JobSpec& job, std::ostream& out) {
  const Resolved r = resolve_coefficients(job);
  const auto report =
      verify::run_verification(r.coeffs, job.dims, job.verify_opts);

  std::ostringstream text;
  const auto& t = job.verify_opts.tol;
  if (job.format == "json") {
    ordered_json doc;
    doc["meta"] = meta_json(job, r, "verify");
    doc["meta"]["tolerances"] = tolerances_json(t);
    ordered_json data = ordered_json::array();
    for (const auto& c : report.checks)
      data.push_back(ordered_json{{"name", c.name},
                                  {"observed", c.observed},
                                  {"threshold", c.threshold},
                                  {"bound", c.require_at_least ? "at_least"
                                                               : "at_most"},
                                  {"pass", c.pass}});
    doc["data"] = data;
    doc["all_pass"] = report.all_pass;
    text << doc.dump(2) << '\n';
  } else if (job.format == "csv") {
    text << "name,observed,threshold,bound,pass\n";
    for (const auto& c : report.checks)
      text << '"' << c.name << "\"," << format_sig12(c.observed) << ','
           << format_sig12(c.threshold) << ','
           << (c.require_at_least ? "at_least" : "at_most") << ','
           << (c.pass ? "1" : "0") << '\n';
  } else {
    text << "# psharm " << version_string << " verify (" << r.source << ")\n";
    text << "# tolerances: normalization=" << format_sig12(t.normalization)
         << " orthogonality=" << format_sig12(t.orthogonality)
         << " residual_exact=" << format_sig12(t.residual_exact)
         << " residual_detuned>=" << format_sig12(t.residual_detuned)
         << " ladder=" << format_sig12(t.ladder_pointwise)
         << " algebra=" << format_sig12(t.algebra)
         << " oracle=" << format_sig12(t.oracle_rel) << "\n";
    for (const auto& c : report.checks)
      text << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(42)
           << c.name << std::right << " observed "
           << format_sig12(c.observed)
           << (c.require_at_least ? " >= " : " <= ")
           << format_sig12(c.threshold) << '\n';
    text << (report.all_pass ? "all checks passed\n"
                             : "verification FAILED\n");
  }
  emit(job, out, text.str());
  return report.all_pass ? exit_ok : exit_verification_failure;
}

// --------------------------------------------------------- oracle-compare

int run_oracle_compare(const JobSpec& job, std::ostream& out) {
  const Resolved r = resolve_coefficients(job);
  struct Row {
    QuantumNumbers qn;
    double closed, fd, abs_delta, rel_delta, convergence;
  };
  std::vector<Row> rows;
  bool breach = false;
  const double tol = job.verify_opts.tol.oracle_rel;
  for (int dim : job.dims) {
    for (int ell = 0; ell <= job.ell_max; ++ell) {
      const auto problem = oracle::make_problem(r.coeffs, ell, dim, job.n_max,
                                                job.oracle_points);
      const auto fd = oracle::richardson(problem, job.n_max + 1,
                                         job.oracle_refinements);
      for (int n = 0; n <= job.n_max; ++n) {
        Row row;
        row.qn = {n, ell, dim};
        row.closed = spectrum::energy(r.coeffs, row.qn).energy;
        row.fd = fd.eigenvalues[n];
        row.abs_delta = std::abs(row.fd - row.closed);
        row.rel_delta = row.abs_delta / std::max(1.0, std::abs(row.closed));
        row.convergence = fd.convergence[n];
        breach = breach || row.rel_delta > tol;
        rows.push_back(row);
      }
    }
  }

  std::ostringstream text;
  if (job.format == "csv") {
    text << "n,ell,dim,closed_form,oracle,abs_delta,rel_delta,convergence\n";
    for (const auto& row : rows)
      text << row.qn.n << ',' << row.qn.ell << ',' << row.qn.dim << ','
           << format_sig12(row.closed) << ',' << format_sig12(row.fd) << ','
           << format_sig12(row.abs_delta) << ','
           << format_sig12(row.rel_delta) << ','
           << format_sig12(row.convergence) << '\n';
  } else if (job.format == "json") {
    ordered_json doc;
    doc["meta"] = meta_json(job, r, "oracle-compare");
    doc["meta"]["tolerances"] = ordered_json{{"oracle_rel", tol}};
    doc["meta"]["oracle"] =
        ordered_json{{"points", job.oracle_points},
                     {"refinements", job.oracle_refinements}};
    ordered_json data = ordered_json::array();
    for (const auto& row : rows)
      data.push_back(ordered_json{{"n", row.qn.n},
                                  {"ell", row.qn.ell},
                                  {"dim", row.qn.dim},
                                  {"closed_form", row.closed},
                                  {"oracle", row.fd},
                                  {"abs_delta", row.abs_delta},
                                  {"rel_delta", row.rel_delta},
                                  {"convergence", row.convergence}});
    doc["data"] = data;
    doc["all_pass"] = !breach;
    text << doc.dump(2) << '\n';
  } else {
    text << "# psharm " << version_string << " oracle-compare (" << r.source
         << "), tolerance rel=" << format_sig12(tol) << "\n";
    text << std::setw(4) << "n" << std::setw(5) << "ell" << std::setw(5)
         << "dim" << std::setw(20) << "closed" << std::setw(20) << "oracle"
         << std::setw(20) << "rel_delta" << '\n';
    for (const auto& row : rows)
      text << std::setw(4) << row.qn.n << std::setw(5) << row.qn.ell
           << std::setw(5) << row.qn.dim << std::setw(20)
           << format_sig12(row.closed) << std::setw(20)
           << format_sig12(row.fd) << std::setw(20)
           << format_sig12(row.rel_delta) << '\n';
    text << (breach ? "verification FAILED\n" : "all levels within tolerance\n");
  }
  emit(job, out, text.str());
  return breach ? exit_verification_failure : exit_ok;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    require_format(job);
    switch (job.command) {
      case Command::spectrum:
        return run_spectrum(job, out);
      case Command::wavefunction:
        return run_wavefunction(job, out);
      case Command::ladder:
        return run_ladder(job, out);
      case Command::verify:
        return run_verify(job, out);
      case Command::oracle_compare:
        return run_oracle_compare(job, out);
    }
    err << "psharm: unknown command\n";
    return exit_usage;
  } catch (const parse_error& e) {
    err << "psharm: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << '\n';
    return exit_usage;
  } catch (const accuracy_error& e) {
    err << "psharm: accuracy: " << e.what()
        << " (best estimate " << format_sig12(e.best_estimate()) << ")\n";
    return exit_verification_failure;
  } catch (const std::domain_error& e) {
    err << "psharm: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "psharm: internal error: " << e.what() << '\n';
    return exit_usage;
  }
}

std::vector<double> load_spectrum_energies_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'", 0);
  ordered_json doc = ordered_json::parse(in);
  std::vector<double> energies;
  for (const auto& row : doc.at("data"))
    energies.push_back(row.at("energy").get<double>());
  return energies;
}

}  // namespace psharm::cli
