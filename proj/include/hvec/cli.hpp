#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain or parse error,
// 2 resource budget exceeded, 3 corpus mismatch.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hvec/analysis.hpp"
#include "hvec/combinatorics.hpp"
#include "hvec/corpus.hpp"
#include "hvec/ideal_file.hpp"
#include "hvec/report.hpp"

namespace hvec {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitMismatch = 3;

namespace cli {

inline std::optional<std::uint64_t> env_number(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  std::string s(v);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
    throw DomainError(std::string(name) + " must be a non-negative integer, got '" + s + "'");
  return std::stoull(s);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Characteristic precedence: --char, then the file's char line, then
// HVEC_CHAR, then the default.
inline IdealFile load_text(const std::string& text, std::optional<std::uint64_t> char_flag);

inline IdealFile load(const std::string& path, std::optional<std::uint64_t> char_flag) {
  std::string text = read_file(path);
  try {
    return load_text(text, char_flag);
  } catch (const ParseError& e) {
    throw DomainError(path + ":" + e.what());
  }
}

inline IdealFile load_text(const std::string& text, std::optional<std::uint64_t> char_flag) {
  std::optional<std::uint32_t> override;
  if (char_flag) {
    FieldSpec check(*char_flag);
    override = check.characteristic();
  }
  IdealFile probe = parse_ideal_file(text, override);
  if (override || probe.characteristic) return probe;
  if (auto env = env_number("HVEC_CHAR")) {
    FieldSpec check(*env);
    return parse_ideal_file(text, check.characteristic());
  }
  return probe;
}

inline std::string csv(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline std::vector<std::int64_t> parse_csv(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw DomainError("empty entry in sequence '" + text + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw DomainError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty sequence");
  return out;
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace cli

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hvec: Hilbert functions of graded quotients of polynomial rings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hvec 1.0.0");

  GroebnerOptions gopts;
  app.add_option("--max-basis-size", gopts.max_basis_size, "Groebner basis size budget");
  app.add_option("--max-steps", gopts.max_reduction_steps, "reduction step budget");
  app.fallthrough();

  std::string file;
  std::optional<std::uint64_t> char_flag;
  std::optional<std::uint64_t> seed_flag;
  std::optional<int> max_degree;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of R/I");
  hilbert->add_option("file", file, "ideal file")->required();
  hilbert->add_option("--max-degree", max_degree, "last degree to compute")->check(CLI::NonNegativeNumber);
  hilbert->add_option("--char", char_flag, "field characteristic");
  bool hilbert_json = false;
  hilbert->add_flag("--json", hilbert_json, "print JSON");

  auto* analyze_cmd = app.add_subcommand("analyze", "full report as JSON");
  analyze_cmd->add_option("file", file, "ideal file")->required();
  analyze_cmd->add_option("--seed", seed_flag, "seed for general linear forms");
  analyze_cmd->add_option("--char", char_flag, "field characteristic");
  analyze_cmd->add_option("--max-degree", max_degree, "last degree to compute")->check(CLI::NonNegativeNumber);
  std::string json_path;
  analyze_cmd->add_option("--json", json_path, "write the report here instead of stdout");
  bool analyze_file_forms = false;
  analyze_cmd->add_flag("--forms-from-file", analyze_file_forms, "use the file's forms line");
  bool timings = false;
  analyze_cmd->add_flag("--timings", timings, "fill timings_ms");

  auto* reduce = app.add_subcommand("reduce", "reduction by general linear forms");
  reduce->add_option("file", file, "ideal file")->required();
  bool reduce_file_forms = false;
  reduce->add_flag("--forms-from-file", reduce_file_forms, "use the file's forms line");
  int count = 2;
  reduce->add_option("--count", count, "number of forms")->check(CLI::IsMember({1, 2}));
  reduce->add_option("--seed", seed_flag, "seed for general linear forms");
  reduce->add_option("--char", char_flag, "field characteristic");
  reduce->add_option("--max-degree", max_degree, "last degree to compute")->check(CLI::NonNegativeNumber);

  auto* colon_cmd = app.add_subcommand("colon", "colon ideal I : f");
  colon_cmd->add_option("file", file, "ideal file")->required();
  std::string by;
  colon_cmd->add_option("--by", by, "homogeneous polynomial f")->required();
  colon_cmd->add_option("--char", char_flag, "field characteristic");
  colon_cmd->add_option("--max-degree", max_degree, "last degree to compute")->check(CLI::NonNegativeNumber);

  auto* expansion = app.add_subcommand("expansion", "i-binomial expansion with Macaulay and Green bounds");
  std::string h_text;
  int degree_i = 0;
  expansion->add_option("value", h_text, "h")->required();
  expansion->add_option("i", degree_i, "degree")->required();

  auto* check_seq = app.add_subcommand("check-seq", "test a sequence for O-sequence, unimodal, SI");
  std::string seq_text;
  check_seq->add_option("sequence", seq_text, "comma separated values")->required();
  bool want_si = false, want_unimodal = false, want_o = false, complete = false;
  check_seq->add_flag("--si", want_si, "SI-sequence");
  check_seq->add_flag("--unimodal", want_unimodal, "unimodal");
  check_seq->add_flag("--o-seq", want_o, "O-sequence");
  check_seq->add_flag("--complete", complete, "the sequence is a whole h-vector");

  auto* corpus_cmd = app.add_subcommand("corpus", "check the bundled examples");
  bool all = false;
  std::string label;
  corpus_cmd->add_flag("--all", all, "every entry (default)");
  corpus_cmd->add_option("--label", label, "one entry, ex1..ex4");
  bool corpus_json = false;
  corpus_cmd->add_flag("--json", corpus_json, "print JSON");

  std::vector<const char*> argv{"hvec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    auto seed = [&] { return seed_flag ? *seed_flag : cli::env_number("HVEC_SEED").value_or(kDefaultSeed); };

    if (*hilbert) {
      IdealFile f = cli::load(file, char_flag);
      Ideal I = f.ideal();
      HVector h = hilbert_function(I, max_degree, gopts);
      if (hilbert_json) {
        Json j{{"h_vector", h.values()}, {"socle_degree", optional_json(h.socle_degree())},
               {"artinian", h.is_artinian()}};
        out << j.dump(2) << '\n';
      } else {
        out << "h-vector: " << cli::csv(h.values()) << '\n';
        if (h.is_artinian())
          out << "socle degree: " << *h.socle_degree() << '\n';
        else
          out << "truncated at degree " << h.known_degree() << '\n';
      }
      return kExitOk;
    }

    if (*analyze_cmd) {
      IdealFile f = cli::load(file, char_flag);
      AnalysisOptions opts;
      opts.seed = seed();
      opts.max_degree = max_degree;
      opts.record_timings = timings;
      opts.groebner = gopts;
      if (analyze_file_forms) opts.forms = f.forms;
      AnalysisReport report = analyze(f.ideal(), opts, f.label.value_or(""));
      std::string text = to_json(report, f.variables).dump(2) + "\n";
      if (json_path.empty()) {
        out << text;
      } else {
        std::ofstream o(json_path, std::ios::binary);
        if (!o) throw DomainError("cannot write '" + json_path + "'");
        o << text;
      }
      for (const auto& e : report.errors)
        if (e.find(": resource: ") != std::string::npos) return kExitResource;
      return kExitOk;
    }

    if (*reduce) {
      IdealFile f = cli::load(file, char_flag);
      if (reduce_file_forms && static_cast<int>(f.forms.size()) < count)
        throw DomainError("the file declares " + std::to_string(f.forms.size()) + " forms, " +
                          std::to_string(count) + " needed");
      std::vector<Polynomial> forms = reduce_file_forms ? f.forms : std::vector<Polynomial>{};
      ReductionOptions ro{max_degree, true, gopts};
      std::uint64_t s = seed();
      ReductionResult r = artinian_reduction(f.ideal(), forms, s, count, ro);
      for (std::size_t k = 0; k < r.forms.size(); ++k)
        out << "l" << k + 1 << ": " << r.forms[k].to_string(f.variables) << '\n';
      if (r.seed) out << "seed: " << *r.seed << '\n';
      out << "f-vector: " << cli::csv(r.f_vector.values()) << '\n';
      if (r.initial_degree_a) out << "a: " << *r.initial_degree_a << '\n';
      if (r.second_gap_m) out << "m: " << *r.second_gap_m << '\n';
      out << "genericity confirmed: " << cli::yes_no(r.genericity_confirmed) << " (validation seed "
          << r.validation_seed << ")\n";
      return kExitOk;
    }

    if (*colon_cmd) {
      IdealFile f = cli::load(file, char_flag);
      Polynomial g = parse_polynomial(by, f.ring, f.variables);
      ColonResult c = colon_by_form(f.ideal(), g, max_degree, gopts);
      if (c.unit) {
        out << "unit ideal: f lies in I\n";
        return kExitOk;
      }
      out << "generators:";
      for (const auto& p : c.quotient_ideal->generators()) out << ' ' << p.to_string(f.variables);
      out << '\n';
      out << "h-vector: " << cli::csv(c.h_vector.values()) << '\n';
      if (c.h_vector.is_artinian()) out << "socle degree: " << *c.h_vector.socle_degree() << '\n';
      if (c.expected_socle)
        out << "expected socle degree e - d: " << *c.expected_socle << " ("
            << (*c.socle_matches ? "matches" : "differs") << ")\n";
      if (c.symmetric) out << "symmetric: " << cli::yes_no(*c.symmetric) << '\n';
      return kExitOk;
    }

    if (*expansion) {
      Integer h;
      if (h_text.empty() || h_text.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError("h must be a non-negative integer, got '" + h_text + "'");
      h = Integer(h_text);
      auto ex = binomial_expansion(h, degree_i);
      out << h << " =";
      if (ex.terms.empty()) out << " 0";
      for (std::size_t k = 0; k < ex.terms.size(); ++k)
        out << (k ? " +" : "") << " C(" << ex.terms[k].top << "," << ex.terms[k].bottom << ")";
      out << '\n';
      out << "growth: " << growth_bound(h, degree_i) << '\n';
      out << "green: " << green_bound(h, degree_i) << '\n';
      return kExitOk;
    }

    if (*check_seq) {
      auto values = cli::parse_csv(seq_text);
      bool any = want_si || want_unimodal || want_o;
      if (!any) want_si = want_unimodal = want_o = true;
      bool whole = complete || values.back() <= 1;
      if (want_o) {
        auto v = is_o_sequence(values);
        out << "O-sequence: " << cli::yes_no(v.ok);
        if (v.index) out << " (fails at index " << *v.index << ")";
        out << '\n';
      }
      std::optional<HVector> h;
      if (whole) h = HVector::artinian(values);
      if (want_unimodal) {
        auto v = is_unimodal(values);
        out << "unimodal: " << cli::yes_no(v.ok);
        if (v.index) out << " (rises again after the drop at index " << *v.index << ")";
        if (!whole && v.ok) out << " (on the given prefix)";
        out << '\n';
      }
      if (want_si) {
        if (!h)
          out << "symmetric: not-applicable (truncated input)\nSI-sequence: not-applicable (truncated input)\n";
        else
          out << "symmetric: " << cli::yes_no(is_symmetric(*h)) << "\nSI-sequence: "
              << cli::yes_no(is_si_sequence(*h).ok) << '\n';
      }
      return kExitOk;
    }

    if (*corpus_cmd) {
      std::vector<const CorpusEntry*> entries;
      if (!label.empty() && !all)
        entries.push_back(&corpus_entry(label));
      else
        for (const auto& e : corpus()) entries.push_back(&e);
      bool ok = true;
      Json j = Json::array();
      for (const auto* e : entries) {
        CorpusOutcome o = run_corpus_entry(*e, gopts);
        ok = ok && o.passed();
        if (corpus_json) {
          j.push_back(Json{{"label", o.label}, {"pass", o.passed()}, {"h_vector", o.h_vector.values()},
                           {"mismatches", o.mismatches}});
          continue;
        }
        out << o.label << ' ' << (o.passed() ? "PASS" : "FAIL") << '\n';
        for (const auto& m : o.mismatches) out << "  " << m << '\n';
      }
      if (corpus_json) out << j.dump(2) << '\n';
      return ok ? kExitOk : kExitMismatch;
    }
  } catch (const ResourceError& e) {
    err << "hvec: resource limit '" << e.budget() << "' exceeded: " << e.what() << '\n';
    return kExitResource;
  } catch (const DomainError& e) {
    err << "hvec: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitDomain;
}

inline int run_command(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_command(args, std::cout, std::cerr);
}

}  // namespace hvec
