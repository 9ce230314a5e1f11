#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "braidburau/braidburau.hpp"

namespace bb = braidburau;

namespace {

// Flags shared by every subcommand that needs local coefficients.
struct CoefficientFlags {
  std::string t = "generic";
  std::string u = "0";
  std::string algebra;
  std::string weights;
  std::string kappa = "0";
  std::string kvec;

  void attach(CLI::App* app) {
    app->add_option("--t", t, "exponent a of t = q^a, or 'generic' (a = 1)");
    app->add_option("--u", u, "exponent c of the braid scalar u = q^c");
    app->add_option("--algebra", algebra, "Cartan type, e.g. A1; takes t from the local system");
    app->add_option("--weights", weights, "comma-separated weights, e.g. w1,w1");
    app->add_option("--kappa", kappa, "rational coupling, e.g. 1/4");
    app->add_option("--kvec", kvec, "comma-separated k-vector, e.g. 1");
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

bb::LocalSystemSpec local_system_from(const CoefficientFlags& f, int expected_n) {
  if (f.weights.empty() || f.kvec.empty()) throw bb::ParseError("--algebra needs --weights and --kvec");
  bb::CartanDatum g = bb::cartan_datum(f.algebra);
  std::vector<bb::Weight> weights;
  for (const auto& w : split(f.weights, ',')) weights.push_back(bb::parse_weight(g, w));
  std::vector<int> k;
  for (const auto& x : split(f.kvec, ',')) {
    bb::Rational r = bb::parse_rational(x);
    if (r.denominator() != 1) throw bb::ParseError("k-vector entries must be integers");
    k.push_back(static_cast<int>(r.numerator()));
  }
  if (expected_n > 0 && static_cast<int>(weights.size()) != expected_n)
    throw bb::ShapeError("--weights lists " + std::to_string(weights.size()) + " weights but --n is " +
                         std::to_string(expected_n));
  return bb::make_local_system(g, std::move(weights), std::move(k), bb::parse_rational(f.kappa));
}

bb::Specialization specialization_from(const CoefficientFlags& f, int n) {
  bb::Specialization sp;
  sp.u_exponent = bb::parse_rational(f.u);
  if (!f.algebra.empty())
    sp.t_exponent = bb::local_t_exponent(local_system_from(f, n));
  else if (f.t != "generic")
    sp.t_exponent = bb::parse_rational(f.t);
  return sp;
}

bb::BurauForm form_from(const std::string& s) {
  if (s == "reduced") return bb::BurauForm::kReduced;
  if (s == "unreduced") return bb::BurauForm::kUnreduced;
  throw bb::ParseError("--form must be reduced or unreduced");
}

// Aligned text grid: one bracketed row per line.
std::string render_grid(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : cells) {
    out += "[ ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c] + std::string(width[c] - row[c].size(), ' ');
      out += c + 1 < row.size() ? " & " : " ]\n";
    }
  }
  return out;
}

template <class M, class F>
std::string render_matrix(const M& m, F&& fmt) {
  std::vector<std::vector<std::string>> cells(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) cells[r].push_back(fmt(m(r, c)));
  return render_grid(cells);
}

std::string render(const bb::LabeledMatrix& m) {
  std::string head = "label " + (m.label ? m.label->to_string() : std::string("none")) + "\n";
  return head + render_matrix(m.matrix, [](const bb::FreeRing& x) { return x.to_string(); });
}

std::string render(const bb::LaurentMatrix& m, char var) {
  return render_matrix(m, [&](const bb::RationalLaurent& x) { return x.to_string(var); });
}

// Q(z), z = q^(1/D), printed back in q.
std::string fraction_text(const bb::RationalFunction& x, std::int64_t D) {
  std::string num = bb::poly_to_laurent(x.num(), D).to_string('q');
  if (x.den() == bb::Poly(1)) return num;
  const auto& d = x.den().coeffs();
  if (d.back() == 1 && x.den() == bb::Poly::monomial(d.size() - 1))
    return bb::poly_to_laurent(x.num(), D, -static_cast<std::int64_t>(d.size() - 1)).to_string('q');
  return "(" + num + ")/(" + bb::poly_to_laurent(x.den(), D).to_string('q') + ")";
}

void print_json(const bb::Json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid-valued Burau representations: exact symbolic computations"};
  app.require_subcommand(1);

  // burau
  auto* burau = app.add_subcommand("burau", "braid-valued Burau family or the matrix of one braid");
  int burau_n = 3;
  std::string burau_form = "reduced", burau_route = "closed", burau_braid;
  bool burau_latex = false, burau_inverses = false;
  burau->add_option("--n", burau_n, "strands")->required();
  burau->add_option("--form", burau_form, "reduced | unreduced");
  burau->add_option("--route", burau_route, "closed | groupoid");
  burau->add_option("--braid", burau_braid, "braid word, e.g. 's1 s2^-1'");
  burau->add_flag("--inverses", burau_inverses, "emit the tau_i^-1 matrices instead");
  burau->add_flag("--json", "JSON output (default)");
  burau->add_flag("--latex", burau_latex, "aligned text output");

  // artin
  auto* artin = app.add_subcommand("artin", "Artin action of a braid on F_n");
  int artin_n = 3;
  std::string artin_braid, artin_word;
  artin->add_option("--n", artin_n, "strands")->required();
  artin->add_option("--braid", artin_braid, "braid word")->required();
  artin->add_option("--word", artin_word, "free word to act on (default: all generators)");

  // groupoid-act
  auto* gact = app.add_subcommand("groupoid-act", "action of a braid on paths of the cell complex");
  int gact_n = 3;
  std::string gact_braid, gact_path, gact_source = "0+e";
  gact->add_option("--n", gact_n, "punctures")->required();
  gact->add_option("--braid", gact_braid, "braid word")->required();
  gact->add_option("--path", gact_path, "path, e.g. 'w0 L1m^-1 w1' (default: every cell)");
  gact->add_option("--source", gact_source, "source object of an identity path, e.g. 1-e");

  // embed
  auto* emb = app.add_subcommand("embed", "image of (b, u) in B_n |x F_n under the embedding into B_{n+1}");
  int emb_n = 2;
  std::string emb_braid, emb_free;
  emb->add_option("--n", emb_n, "strands of the B_n factor")->required();
  emb->add_option("--braid", emb_braid, "braid word in B_n");
  emb->add_option("--free", emb_free, "free word in F_n");

  // exponents
  auto* expo = app.add_subcommand("exponents", "exponent table a_ij of a local system");
  CoefficientFlags expo_flags;
  expo->add_option("--algebra", expo_flags.algebra, "Cartan type, e.g. A1")->required();
  expo->add_option("--weights", expo_flags.weights, "comma-separated weights, e.g. w1,w1")->required();
  expo->add_option("--kappa", expo_flags.kappa, "rational coupling")->required();
  expo->add_option("--kvec", expo_flags.kvec, "comma-separated k-vector")->required();

  // specialize
  auto* spec = app.add_subcommand("specialize", "substitute local coefficients into a braid-valued family");
  int spec_n = 3;
  std::string spec_form = "reduced";
  bool spec_classical = false, spec_latex = false;
  CoefficientFlags spec_flags;
  spec->add_option("--n", spec_n, "strands")->required();
  spec->add_option("--form", spec_form, "reduced | unreduced");
  spec->add_flag("--classical", spec_classical, "tau_i -> 1, f_j -> t (printed in t)");
  spec->add_flag("--latex", spec_latex, "aligned text output");
  spec_flags.attach(spec);

  // homology
  auto* hom = app.add_subcommand("homology", "H_0, H_1 with local coefficients");
  int hom_n = 3;
  CoefficientFlags hom_flags;
  hom->add_option("--n", hom_n, "punctures")->required();
  hom_flags.attach(hom);

  // monodromy
  auto* mono = app.add_subcommand("monodromy", "braid action on H_1 in the kernel basis");
  int mono_n = 3;
  std::string mono_braid;
  bool mono_latex = false;
  CoefficientFlags mono_flags;
  mono->add_option("--n", mono_n, "punctures")->required();
  mono->add_option("--braid", mono_braid, "braid word")->required();
  mono->add_flag("--latex", mono_latex, "aligned text output");
  mono_flags.attach(mono);

  // ybe
  auto* ybe = app.add_subcommand("ybe", "braid-form Yang-Baxter check");
  std::string ybe_fixture, ybe_file;
  std::size_t ybe_d = 0;
  auto* ybe_fix_opt = ybe->add_option("--fixture", ybe_fixture, "built-in R-matrix fixture name");
  auto* ybe_file_opt = ybe->add_option("--matrix", ybe_file, "JSON file with a Laurent matrix");
  ybe->add_option("--d", ybe_d, "local dimension (with --matrix)");
  ybe_fix_opt->excludes(ybe_file_opt);

  // verify
  auto* ver = app.add_subcommand("verify", "check braid relations and construction equivalence");
  int ver_n = 4;
  bool ver_relations = false, ver_oracle = false;
  ver->add_option("--n", ver_n, "strands");
  ver->add_flag("--relations", ver_relations, "braid relations for every construction");
  ver->add_flag("--oracle", ver_oracle, "groupoid route equals closed form");

  // fixtures
  auto* fix = app.add_subcommand("fixtures", "list built-in oracle fixtures");
  std::string fix_show;
  fix->add_option("--show", fix_show, "print one fixture's content");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (burau->parsed()) {
      bb::BurauForm form = form_from(burau_form);
      if (burau_route != "closed" && burau_route != "groupoid") throw bb::ParseError("--route must be closed or groupoid");
      if (!burau_braid.empty()) {
        bb::Braid b = bb::Braid::parse(burau_n, burau_braid);
        bb::LabeledMatrix m = burau_route == "groupoid"
                                  ? bb::burau_matrix_from_groupoid(burau_n, form, b)
                                  : bb::burau_of_braid(bb::burau_closed_form(burau_n, form), b);
        if (burau_latex)
          std::cout << render(m);
        else
          print_json(bb::to_json(m));
        return 0;
      }
      bb::BurauFamily fam =
          burau_route == "groupoid" ? bb::burau_from_groupoid(burau_n, form) : bb::burau_closed_form(burau_n, form);
      const auto& mats = burau_inverses ? fam.inverses : fam.generators;
      if (burau_latex) {
        for (std::size_t i = 0; i < mats.size(); ++i) std::cout << (i ? "\n" : "") << render(mats[i]);
      } else {
        bb::Json out = bb::Json::array();
        for (const auto& m : mats) out.push_back(bb::to_json(m));
        print_json(out);
      }
      return 0;
    }

    if (artin->parsed()) {
      bb::Braid b = bb::Braid::parse(artin_n, artin_braid);
      bb::Json out{{"braid", bb::to_json(b)}};
      if (!artin_word.empty()) {
        bb::FreeWord w = bb::FreeWord::parse(artin_word);
        if (w.max_generator() > artin_n) throw bb::IndexError("free generator outside F_" + std::to_string(artin_n));
        bb::FreeWord img = bb::artin_act(b, w);
        out["word"] = bb::to_json(w);
        out["image"] = bb::to_json(img);
        out["image_text"] = img.to_string();
      } else {
        bb::Json imgs = bb::Json::array(), text = bb::Json::array();
        bb::FreeAutomorphism a = bb::artin_automorphism(b);
        for (const auto& w : a.images()) {
          imgs.push_back(bb::to_json(w));
          text.push_back(w.to_string());
        }
        out["images"] = imgs;
        out["images_text"] = text;
      }
      print_json(out);
      return 0;
    }

    if (gact->parsed()) {
      bb::CellComplexSpec cx(gact_n);
      bb::Braid b = bb::Braid::parse(gact_n, gact_braid);
      auto describe = [&](const bb::GroupoidPath& p) {
        bb::GroupoidPath img = bb::groupoid_act(b, p);
        return bb::Json{{"path", p.to_string()},          {"source", p.source().to_string()},
                        {"target", p.target().to_string()}, {"image", img.to_string()},
                        {"image_source", img.source().to_string()}, {"image_target", img.target().to_string()}};
      };
      bb::Json out{{"braid", bb::to_json(b)}};
      if (!gact_path.empty() || gact->count("--source")) {
        out["action"] = describe(bb::GroupoidPath::parse(cx, gact_path, bb::Object::parse(gact_source)));
      } else {
        bb::Json cells = bb::Json::array();
        for (const auto& c : cx.cells()) cells.push_back(describe(bb::GroupoidPath::edge(cx, c)));
        out["cells"] = cells;
      }
      print_json(out);
      return 0;
    }

    if (emb->parsed()) {
      bb::Braid b = emb_braid.empty() ? bb::Braid::identity(emb_n) : bb::Braid::parse(emb_n, emb_braid);
      bb::FreeWord u = bb::FreeWord::parse(emb_free);
      if (u.max_generator() > emb_n) throw bb::IndexError("free generator outside F_" + std::to_string(emb_n));
      bb::Braid up = bb::embed_semidirect(bb::SemidirectElement(b, u));
      print_json({{"braid", bb::to_json(b)},
                  {"free", bb::to_json(u)},
                  {"image", bb::to_json(up)},
                  {"image_text", up.to_string()}});
      return 0;
    }

    if (expo->parsed()) {
      print_json(bb::to_json(local_system_from(expo_flags, 0)));
      return 0;
    }

    if (spec->parsed()) {
      bb::BurauFamily fam = bb::burau_closed_form(spec_n, form_from(spec_form));
      bb::Specialization sp = spec_classical ? bb::Specialization{} : specialization_from(spec_flags, spec_n);
      if (spec_classical && (spec->count("--t") || spec->count("--algebra")))
        throw bb::ParseError("--classical fixes t; drop --t/--algebra");
      bb::SpecializedFamily sf = bb::specialize_family(fam, sp.t_exponent, sp.u_exponent);
      const char var = spec_classical ? 't' : 'q';
      if (spec_latex) {
        for (int i = 1; i <= spec_n - 1; ++i)
          std::cout << (i > 1 ? "\n" : "") << "s" << i << "\n" << render(sf.generator(i), var);
        return 0;
      }
      bb::Json gens = bb::Json::array(), invs = bb::Json::array();
      for (const auto& m : sf.generators) gens.push_back(bb::to_json(m));
      for (const auto& m : sf.inverses) invs.push_back(bb::to_json(m));
      print_json({{"n", spec_n},
                  {"form", spec_form},
                  {"variable", std::string(1, var)},
                  {"t_exponent", bb::to_string(sp.t_exponent)},
                  {"u_exponent", bb::to_string(sp.u_exponent)},
                  {"generators", gens},
                  {"inverses", invs}});
      return 0;
    }

    if (hom->parsed()) {
      bb::HomologyResult h = bb::homology(hom_n, specialization_from(hom_flags, hom_n));
      if (h.degenerate) std::cerr << "warning: t = 1 is degenerate; reporting the untwisted homology\n";
      print_json(bb::to_json(h));
      return 0;
    }

    if (mono->parsed()) {
      bb::Braid b = bb::Braid::parse(mono_n, mono_braid);
      bb::HomologyResult h = bb::homology(mono_n, specialization_from(mono_flags, mono_n));
      bb::FractionMatrix m = bb::monodromy_action(b, h);
      auto cp = bb::char_poly(m);
      if (mono_latex) {
        std::cout << render_matrix(m, [&](const bb::RationalFunction& x) { return fraction_text(x, h.denominator); });
        std::cout << "char poly (lowest degree first):";
        for (const auto& c : cp) std::cout << " [" << fraction_text(c, h.denominator) << "]";
        std::cout << "\n";
        return 0;
      }
      print_json({{"braid", bb::to_json(b)},
                  {"t_exponent", bb::to_string(h.spec.t_exponent)},
                  {"u_exponent", bb::to_string(h.spec.u_exponent)},
                  {"degenerate", h.degenerate},
                  {"matrix", bb::fraction_matrix_to_json(m, h.denominator)},
                  {"char_poly", bb::characteristic_to_json(cp, h.denominator)}});
      return 0;
    }

    if (ybe->parsed()) {
      bb::LaurentMatrix r;
      std::size_t d = ybe_d;
      if (!ybe_fixture.empty()) {
        bb::Fixture f = bb::find_fixture(ybe_fixture);
        if (f.kind != "r-matrix") throw bb::ShapeError("fixture '" + ybe_fixture + "' is not an R-matrix");
        r = bb::laurent_matrix_from_json(f.content["matrix"]);
        d = f.content["d"].get<std::size_t>();
      } else if (!ybe_file.empty()) {
        std::ifstream in(ybe_file);
        if (!in) throw bb::ParseError("cannot read " + ybe_file);
        bb::Json j;
        try {
          j = bb::Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
          throw bb::ParseError(std::string("invalid JSON: ") + e.what());
        }
        r = bb::laurent_matrix_from_json(j);
      } else {
        throw bb::ParseError("ybe needs --fixture or --matrix");
      }
      bool ok = bb::ybe_check(r, d);
      std::cout << (ok ? "YBE: satisfied" : "YBE: violated") << "\n";
      return ok ? 0 : 1;
    }

    if (ver->parsed()) {
      if (ver_n < 2) throw bb::IndexError("verify needs n >= 2");
      if (!ver_relations && !ver_oracle) ver_relations = true;
      bool all_ok = true;
      if (ver_oracle) {
        for (bb::BurauForm form : {bb::BurauForm::kReduced, bb::BurauForm::kUnreduced}) {
          bb::BurauFamily a = bb::burau_from_groupoid(ver_n, form), c = bb::burau_closed_form(ver_n, form);
          for (int i = 1; i <= ver_n - 1; ++i)
            for (int s : {1, -1})
              if (!bb::labeled_equal(a.generator(i, s), c.generator(i, s))) {
                std::cout << "FAIL: " << bb::to_string(form) << " s" << i << (s < 0 ? "^-1" : "")
                          << " groupoid route differs from closed form\n";
                all_ok = false;
              }
        }
        if (all_ok) std::cout << "OK: groupoid and closed-form families agree for n=" << ver_n << "\n";
      }
      if (ver_relations) {
        bb::BurauFamily red = bb::burau_closed_form(ver_n, bb::BurauForm::kReduced);
        bb::BurauFamily unred = bb::burau_closed_form(ver_n, bb::BurauForm::kUnreduced);
        bb::SpecializedFamily cred = bb::specialize_classical(red), cunred = bb::specialize_classical(unred);
        int far = 0, braid = 0;
        bool rel_ok = true;
        for (const auto& r : bb::braid_relations(ver_n)) {
          std::vector<std::pair<std::string, bool>> checks{
              {"artin", bb::artin_relation_holds(r)},
              {"groupoid", bb::groupoid_relation_holds(r)},
              {"reduced family", bb::family_relation_holds(red, r)},
              {"unreduced family", bb::family_relation_holds(unred, r)},
              {"classical reduced", bb::specialized_relation_holds(cred, r)},
              {"classical unreduced", bb::specialized_relation_holds(cunred, r)}};
          for (const auto& [what, ok] : checks)
            if (!ok) {
              std::cout << "FAIL: " << r.to_string() << " (" << what << ")\n";
              rel_ok = false;
            }
          (r.far ? far : braid) += 1;
        }
        if (rel_ok) std::printf("OK: %d far-commutations, %d braid relations\n", far, braid);
        all_ok = all_ok && rel_ok;
      }
      return all_ok ? 0 : 1;
    }

    if (fix->parsed()) {
      if (!fix_show.empty()) {
        print_json(bb::find_fixture(fix_show).content);
        return 0;
      }
      bb::Json out = bb::Json::array();
      for (const auto& f : bb::list_fixtures())
        out.push_back({{"name", f.name}, {"kind", f.kind}, {"hash", f.hash()}, {"description", f.description}});
      print_json(out);
      return 0;
    }
  } catch (const bb::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const bb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
