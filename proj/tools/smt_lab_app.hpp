#pragma once

// smt-lab: command-line driver. run_smt_lab() is the whole program; main() only forwards.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smt/io.hpp"
#include "smt/verify.hpp"

namespace smt::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kInvariant = 3, kResource = 4 };

enum class Format { Json, Csv, Text };

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void print_report(const SuiteReport& r, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::Json: {
      Json checks = Json::array();
      for (auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      out << Json{{"schema", kSchemaVersion}, {"suite", r.suite}, {"shape", to_json(r.shape)}, {"pass", r.pass()}, {"checks", checks}}.dump(2)
          << "\n";
      break;
    }
    case Format::Csv:
      out << "suite,check,pass,detail\n";
      for (auto& c : r.checks)
        out << r.suite << "," << csv_field(c.name) << "," << (c.pass ? "true" : "false") << "," << csv_field(c.detail) << "\n";
      break;
    case Format::Text:
      for (auto& c : r.checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
      out << r.suite << " " << r.shape.to_string() << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
      break;
  }
}

inline void print_listing(const std::string& kind, const Shape& s, const std::vector<std::string>& items, Format fmt,
                          std::ostream& out) {
  switch (fmt) {
    case Format::Json:
      out << Json{{"schema", kSchemaVersion}, {"kind", kind}, {"shape", to_json(s)}, {"count", items.size()}, {"items", items}}.dump(2)
          << "\n";
      break;
    case Format::Csv:
      out << "index,item\n";
      for (std::size_t k = 0; k < items.size(); ++k) out << k << "," << csv_field(items[k]) << "\n";
      break;
    case Format::Text:
      for (auto& x : items) out << x << "\n";
      break;
  }
}

inline void print_expansion(const std::string& input, const Expansion& e, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::Json:
      out << Json{{"schema", kSchemaVersion}, {"input", input}, {"terms", to_json(e)}}.dump(2) << "\n";
      break;
    case Format::Csv:
      out << "coeff,monomial\n";
      for (auto& t : e) out << to_fraction_string(t.coeff) << "," << csv_field(t.monomial.to_string()) << "\n";
      break;
    case Format::Text:
      out << to_string(e);
      break;
  }
}

inline int run_smt_lab(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Standard monomial theory laboratory", "smt-lab"};
  app.require_subcommand(1);
  app.fallthrough();

  int n = 2, m = 3, q = 3;
  RunConfig cfg;
  std::string format = "text";
  app.add_option("--n", n, "dimension of V")->capture_default_str();
  app.add_option("--m", m, "number of vectors")->capture_default_str();
  app.add_option("--q", q, "number of covectors")->capture_default_str();
  app.add_option("--maxdeg", cfg.maxdeg, "degree cap for basis, presentation and GL checks")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for every randomized check")->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--cap-monomials", cfg.cap_monomials, "largest monomial space handed to the oracle")->capture_default_str();
  app.add_option("--cap-lattice", cfg.cap_lattice, "largest poset for chain and triple enumeration")->capture_default_str();
  app.add_option("--samples", cfg.samples, "random monomials per randomized check")->capture_default_str();

  auto* en = app.add_subcommand("enumerate", "list H, D or standard monomials");
  std::string poset = "H", mode = "S", bideg;
  bool standard = false;
  int degree = 1;
  en->add_option("--poset", poset, "H or D")->check(CLI::IsMember({"H", "D"}));
  en->add_flag("--standard", standard, "list standard monomials instead of poset elements");
  en->add_option("--bidegree", bideg, "a,b for standard monomials of S");
  en->add_option("--mode", mode, "S or RD")->check(CLI::IsMember({"S", "RD"}));
  en->add_option("--degree", degree, "degree for standard monomials of R(D)");

  auto* sc = app.add_subcommand("straighten", "expand a monomial in standard monomials");
  std::string monomial, strategy = "first", smode;
  sc->add_option("monomial", monomial, "e.g. \"p[1|2]*p[2|1]\"")->required();
  sc->add_option("--strategy", strategy, "pair selection")->check(CLI::IsMember({"first", "last", "random"}));
  sc->add_option("--mode", smode, "S or RD (default: RD if TOP/BOT appear)")->check(CLI::IsMember({"S", "RD"}));

  auto* vc = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::vector<std::string> names{"all"};
  for (auto& [name, fn] : suites()) names.push_back(name);
  vc->add_option("--suite", suite, "suite name or 'all'")->required()->check(CLI::IsMember(names));

  auto* rc = app.add_subcommand("relations", "print every straightening relation of D");

  auto* hc = app.add_subcommand("hibi", "lattice algebra on D or on a lattice file");
  std::string lattice_file;
  bool export_lattice = false;
  hc->add_option("--lattice", lattice_file, "lattice JSON to load instead of D");
  hc->add_flag("--export", export_lattice, "print the lattice as JSON");

  std::vector<std::string> argv_store{"smt-lab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    int rc_code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return rc_code == 0 ? kPass : kUsage;
  }

  const Format fmt = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  try {
    cfg.shape = Shape(n, m, q);
    const Shape& s = cfg.shape;

    if (en->parsed()) {
      std::vector<std::string> items;
      std::string kind;
      if (standard) {
        std::vector<GenMonomial> monos;
        if (mode == "RD") {
          monos = enumerate_standard_rd(s, degree);
          kind = "standard RD degree " + std::to_string(degree);
        } else {
          auto comma = bideg.find(',');
          if (comma == std::string::npos) throw ParseError("--bidegree needs the form a,b");
          Bidegree d{std::stoi(bideg.substr(0, comma)), std::stoi(bideg.substr(comma + 1))};
          monos = enumerate_standard(s, d);
          kind = "standard S bidegree " + bideg;
        }
        for (auto& M : monos) items.push_back(M.to_string());
      } else {
        for (auto& x : poset_elements(poset == "H" ? PosetKind::H : PosetKind::D, s)) items.push_back(x.to_string());
        kind = "poset " + poset;
      }
      print_listing(kind, s, items, fmt, out);
      return kPass;
    }

    if (sc->parsed()) {
      GenMonomial M = smode.empty() ? GenMonomial::parse(s, monomial) : GenMonomial::parse(s, monomial, smode == "RD" ? Mode::RD : Mode::S);
      Straightener st(s);
      StraightenOptions opt;
      opt.strategy = strategy == "last" ? PairStrategy::Last : strategy == "random" ? PairStrategy::Random : PairStrategy::First;
      opt.seed = cfg.seed;
      print_expansion(M.to_string(), straighten(M, st, opt), fmt, out);
      return kPass;
    }

    if (vc->parsed()) {
      bool all_pass = true;
      for (auto& [name, fn] : suites()) {
        if (suite != "all" && suite != name) continue;
        auto t0 = std::chrono::steady_clock::now();
        auto rep = fn(cfg);
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        print_report(rep, fmt, out);
        err << name << ": " << secs << " s\n";
        all_pass = all_pass && rep.pass();
      }
      return all_pass ? kPass : kFail;
    }

    if (rc->parsed()) {
      Straightener st(s);
      if (fmt == Format::Json) {
        out << relations_json(st).dump(2) << "\n";
      } else {
        if (fmt == Format::Csv) out << "family,relation\n";
        for (auto& [x, y] : incomparable_pairs(s)) {
          const auto& r = st.relation(x, y);
          if (fmt == Format::Csv)
            out << r.family << "," << csv_field(r.to_string()) << "\n";
          else
            out << r.to_string() << "\n";
        }
      }
      return kPass;
    }

    if (hc->parsed()) {
      FiniteLattice L;
      if (lattice_file.empty()) {
        L = FiniteLattice::of_D(s);
      } else {
        std::ifstream in(lattice_file);
        if (!in) throw ParameterError("cannot open " + lattice_file);
        Json j;
        try {
          j = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
          throw ParseError(std::string("bad JSON in ") + lattice_file + ": " + e.what());
        }
        L = lattice_from_json(j);
      }
      if (export_lattice) {
        out << lattice_to_json(L).dump(2) << "\n";
        return kPass;
      }
      if (L.size() > cfg.cap_lattice) throw ResourceError("lattice exceeds --cap-lattice");
      SuiteReport rep{"hibi", s, {}};
      const bool distributive = L.is_distributive(cfg.cap_lattice);
      rep.add("distributive", distributive, std::to_string(L.size()) + " elements");
      if (distributive) rep.add("binomial generators", true, std::to_string(binomial_generators(L).size()));
      for (int k = 0; k <= cfg.maxdeg; ++k) rep.add("hilbert k=" + std::to_string(k), true, hilbert_A(L, k).get_str());
      rep.add("rank", true, std::to_string(poset_rank(L.poset())));
      print_report(rep, fmt, out);
      return rep.pass() ? kPass : kFail;
    }
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const std::bad_alloc&) {
    err << "resource cap: out of memory\n";
    return kResource;
  } catch (const InvariantError& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace smt::cli
