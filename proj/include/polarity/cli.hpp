#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "canonical.hpp"
#include "folout.hpp"
#include "frame.hpp"
#include "lattice.hpp"
#include "parser.hpp"
#include "printer.hpp"
#include "search.hpp"
#include "semantics.hpp"
#include "translate.hpp"

namespace polarity {

namespace detail {

inline const char* kCliFooter = R"(Formula syntax
  substructural:  p0 p1 ...  top  bot  &  |  *  ->  <-  ( )
                  precedence * > & > | > (-> = <-); -> right-associative,
                  the other binaries left-associative
  sorted modal:   P0 ... (sort 1)  Q0 ... (sort 2)  top@1 bot@1 top@2 bot@2
                  prefixes ~  [d]  [u]  <u>  <d>   binaries &  |  *  ->  <-
                  ([d]: sort 2 -> 1, [u]: sort 1 -> 2, <u>: 1 -> 2, <d>: 2 -> 1;
                   * -> <- demand sort-1 operands)
  sequents:       "<formula> |- <formula>"

Frame files (# starts a comment):
  frame
  X x0 x1          points of X
  Y y0 y1          points of Y
  G x0 y1          Galois pair
  R x0 x0 x0       ternary triple: first R second third
  val p0 = x0      valuation lines (p = substructural, P/Q = sorted modal)
  end

Lattice files:
  lattice
  elems 0 a 1
  leq 0 a          order generators (closed reflexively and transitively)
  fuse a a = a     fusion table (total); rimp/limp lines optional
  end

Exit codes: 0 success/valid, 1 countermodel or entailment failure found,
2 usage or input error.)";

inline std::string classes_text(const std::vector<FrameClassLabel>& ls) {
  std::string s;
  for (size_t i = 0; i < ls.size(); ++i) {
    if (i) s += ' ';
    s += label_name(ls[i]);
  }
  return s;
}

inline std::string condition_text(const TwoSortedFrame& f, FrameCondition c,
                                  const TwoSortedFrame::ConditionResult& r) {
  if (r.holds) return "holds";
  std::string s = "fails at (";
  for (size_t i = 0; i < r.witness.size(); ++i) {
    if (i) s += ", ";
    s += f.x_name(r.witness[i]);
  }
  (void)c;
  return s + ")";
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"polarity: a workbench for two-sorted polarity-frame semantics of "
               "substructural logics"};
  app.footer(detail::kCliFooter);
  app.require_subcommand(1);

  // parse
  std::string p_lang = "sub", p_formula;
  auto* cmd_parse = app.add_subcommand("parse", "Parse a formula and print its canonical form");
  cmd_parse->add_option("--lang", p_lang, "Language: sub or ml2")
      ->check(CLI::IsMember({"sub", "ml2"}));
  cmd_parse->add_option("formula", p_formula, "Formula text")->required();

  // classify
  std::string cl_frame;
  bool cl_report = false;
  auto* cmd_classify = app.add_subcommand("classify", "Report the classes a frame belongs to");
  cmd_classify->add_option("--frame", cl_frame, "Frame file")->required();
  cmd_classify->add_flag("--report", cl_report, "Key-value report with per-condition verdicts");

  // eval
  std::string e_model, e_lang = "sub", e_formula;
  auto* cmd_eval = app.add_subcommand("eval", "Evaluate a formula on a model file");
  cmd_eval->add_option("--model", e_model, "Model file (frame plus val lines)")->required();
  cmd_eval->add_option("--lang", e_lang, "Language: sub or ml2")
      ->check(CLI::IsMember({"sub", "ml2"}));
  cmd_eval->add_option("formula", e_formula, "Formula text")->required();

  // entails
  std::string en_model, en_lang = "sub", en_sequent;
  auto* cmd_entails = app.add_subcommand("entails", "Check a sequent on a model file");
  cmd_entails->add_option("--model", en_model, "Model file")->required();
  cmd_entails->add_option("--lang", en_lang, "Language: sub or ml2")
      ->check(CLI::IsMember({"sub", "ml2"}));
  cmd_entails->add_option("sequent", en_sequent, "\"<formula> |- <formula>\"")->required();

  // translate
  std::string t_mode, t_formula;
  auto* cmd_translate =
      app.add_subcommand("translate", "Translate a substructural formula into the modal language");
  cmd_translate->add_option("--mode", t_mode, "bullet (extent) or circ (intent)")
      ->required()
      ->check(CLI::IsMember({"bullet", "circ"}));
  cmd_translate->add_option("formula", t_formula, "Substructural formula")->required();

  // faithful
  std::string f_model, f_formula, f_sequent;
  auto* cmd_faithful = app.add_subcommand(
      "faithful", "Check the translation identities on a sorted model");
  cmd_faithful->add_option("--model", f_model, "Model file with P/Q valuations")->required();
  cmd_faithful->add_option("--sequent", f_sequent,
                           "Check sequent transfer instead of the identities");
  cmd_faithful->add_option("formula", f_formula, "Substructural formula");

  // countermodel
  std::string cm_class, cm_sequent, cm_out;
  SearchBudget cm_budget;
  auto* cmd_cm = app.add_subcommand("countermodel", "Search for a countermodel to a sequent");
  cmd_cm->add_option("--class", cm_class, "Frame class: nfl fl bci bck bcw")->required();
  cmd_cm->add_option("--sequent", cm_sequent, "\"<formula> |- <formula>\"")->required();
  cmd_cm->add_option("--max-x", cm_budget.max_x, "Largest |X| to search");
  cmd_cm->add_option("--max-y", cm_budget.max_y, "Largest |Y| to search");
  cmd_cm->add_option("--seed", cm_budget.seed, "Sampling seed");
  cmd_cm->add_option("--samples", cm_budget.samples, "Random draws per oversized size");
  cmd_cm->add_option("--workers", cm_budget.workers, "Worker threads");
  cmd_cm->add_option("--out", cm_out, "Write a found countermodel to this file");

  // axioms
  std::string ax_class;
  SearchBudget ax_budget;
  auto* cmd_axioms =
      app.add_subcommand("axioms", "Check the companion-logic axioms over a frame population");
  cmd_axioms->add_option("--class", ax_class, "Frame class: nfl fl bci bck bcw")->required();
  cmd_axioms->add_option("--max-x", ax_budget.max_x, "Largest |X|");
  cmd_axioms->add_option("--max-y", ax_budget.max_y, "Largest |Y|");
  cmd_axioms->add_option("--seed", ax_budget.seed, "Sampling seed");
  cmd_axioms->add_option("--samples", ax_budget.samples, "Random draws per oversized size");

  // canonical
  std::string ca_lattice, ca_emit;
  bool ca_verify = false;
  auto* cmd_canonical =
      app.add_subcommand("canonical", "Build the canonical frame of a finite residuated lattice");
  cmd_canonical->add_option("--lattice", ca_lattice, "Lattice file")->required();
  cmd_canonical->add_option("--emit-frame", ca_emit, "Write the canonical frame to this file");
  cmd_canonical->add_flag("--verify", ca_verify, "Run the embedding checks");

  // export-fol
  std::string x_mode, x_format = "fof", x_formula, x_name = "goal", x_class = "nfl";
  bool x_reduce = false, x_axioms = false;
  auto* cmd_export = app.add_subcommand("export-fol", "Emit a TPTP problem");
  cmd_export->add_option("--mode", x_mode, "ml2, bullet or circ")
      ->required()
      ->check(CLI::IsMember({"ml2", "bullet", "circ"}));
  cmd_export->add_option("--format", x_format, "fof (needs --reduce) or tff")
      ->check(CLI::IsMember({"fof", "tff"}));
  cmd_export->add_flag("--reduce", x_reduce, "Apply sort reduction");
  cmd_export->add_flag("--include-frame-axioms", x_axioms,
                       "Emit the D-conditions and active class conditions as axioms");
  cmd_export->add_option("--class", x_class, "Class whose conditions to emit");
  cmd_export->add_option("--name", x_name, "Name of the conjecture unit");
  cmd_export->add_option("formula", x_formula, "Formula text")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*cmd_parse) {
      if (p_lang == "sub") {
        out << "formula: " << print_formula(parse_sub(p_formula)) << '\n';
      } else {
        SortedFormulaPtr f = parse_ml2(p_formula);
        out << "formula: " << print_formula(f) << '\n';
        out << "sort: " << sort_name(f->sort()) << '\n';
      }
      return 0;
    }

    if (*cmd_classify) {
      ModelFile mf = load_model_file(cl_frame);
      if (!cl_report) {
        out << detail::classes_text(mf.frame.classify()) << '\n';
        return 0;
      }
      out << "classes: " << detail::classes_text(mf.frame.classify()) << '\n';
      const char* names[] = {"c1", "c2", "c3", "c4"};
      FrameCondition cs[] = {FrameCondition::C1, FrameCondition::C2, FrameCondition::C3,
                             FrameCondition::C4};
      for (int i = 0; i < 4; ++i)
        out << names[i] << ": "
            << detail::condition_text(mf.frame, cs[i], mf.frame.check_condition(cs[i])) << '\n';
      return 0;
    }

    if (*cmd_eval) {
      ModelFile mf = load_model_file(e_model);
      if (e_lang == "sub") {
        SubModel m(mf.frame, mf.sub_vals);
        ConceptDenotation d = eval_sub(m, *parse_sub(e_formula));
        out << "extent: " << mf.frame.x_set_text(d.extent) << '\n';
        out << "intent: " << mf.frame.y_set_text(d.intent) << '\n';
      } else {
        ML2Model m(mf.frame, mf.iota1, mf.iota2);
        SortedFormulaPtr f = parse_ml2(e_formula);
        Mask d = eval_ml2(m, *f);
        out << "sort: " << sort_name(f->sort()) << '\n';
        out << "denotation: "
            << (f->sort() == Sort::One ? mf.frame.x_set_text(d) : mf.frame.y_set_text(d)) << '\n';
      }
      return 0;
    }

    if (*cmd_entails) {
      ModelFile mf = load_model_file(en_model);
      Entailment e{true, -1};
      bool sort1 = true;
      if (en_lang == "sub") {
        SubModel m(mf.frame, mf.sub_vals);
        auto [l, r] = parse_sub_sequent(en_sequent);
        e = entails_sub(m, *l, *r);
      } else {
        ML2Model m(mf.frame, mf.iota1, mf.iota2);
        auto [l, r] = parse_ml2_sequent(en_sequent);
        sort1 = l->sort() == Sort::One;
        e = entails_ml2(m, *l, *r);
      }
      if (e.holds) {
        out << "entails: yes\n";
        return 0;
      }
      out << "entails: no\n";
      out << "witness: " << (sort1 ? mf.frame.x_name(e.witness) : mf.frame.y_name(e.witness))
          << '\n';
      return 1;
    }

    if (*cmd_translate) {
      FormulaPtr f = parse_sub(t_formula);
      out << print_formula(t_mode == "bullet" ? bullet(*f) : circ(*f)) << '\n';
      return 0;
    }

    if (*cmd_faithful) {
      ModelFile mf = load_model_file(f_model);
      ML2Model m(mf.frame, mf.iota1, mf.iota2);
      if (!f_sequent.empty()) {
        auto [l, r] = parse_sub_sequent(f_sequent);
        SequentTransfer st = sequent_transfer(m, *l, *r);
        out << "sub: " << (st.sub.holds ? "yes" : "no") << '\n';
        out << "bullet: " << (st.bullet_route.holds ? "yes" : "no") << '\n';
        out << "circ: " << (st.circ_route.holds ? "yes" : "no") << '\n';
        out << "agree: " << (st.agree() ? "yes" : "NO") << '\n';
        return st.agree() ? 0 : 1;
      }
      if (f_formula.empty()) throw EvalError("faithful needs a formula or --sequent");
      FaithfulnessReport rep = verify_faithfulness(m, *parse_sub(f_formula));
      for (const auto& c : rep.checks) {
        out << c.name << ": " << (c.pass ? "ok" : "MISMATCH") << '\n';
        if (!c.pass) {
          bool extent = c.name.rfind("extent", 0) == 0;
          out << "  lhs: " << (extent ? mf.frame.x_set_text(c.lhs) : mf.frame.y_set_text(c.lhs))
              << '\n';
          out << "  rhs: " << (extent ? mf.frame.x_set_text(c.rhs) : mf.frame.y_set_text(c.rhs))
              << '\n';
        }
      }
      out << "verdict: " << (rep.all_pass ? "ok" : "mismatch") << '\n';
      return rep.all_pass ? 0 : 1;
    }

    if (*cmd_cm) {
      auto label = label_from_name(cm_class);
      if (!label) throw EvalError("unknown class '" + cm_class + "'");
      auto [l, r] = parse_sub_sequent(cm_sequent);
      SearchVerdict v = find_countermodel(*label, *l, *r, cm_budget);
      if (v.countermodel) {
        out << "verdict: countermodel found\n";
        out << "witness: " << v.countermodel->model.frame.x_name(v.countermodel->witness)
            << '\n';
        std::string text = model_to_text(v.countermodel->model);
        out << text;
        if (!cm_out.empty()) {
          std::ofstream of(cm_out);
          if (!of) throw EvalError("cannot write '" + cm_out + "'");
          of << text;
        }
        return 1;
      }
      out << "verdict: " << v.summary << '\n';
      out << "frames: " << v.frames_examined << '\n';
      out << "models: " << v.models_examined << '\n';
      return 0;
    }

    if (*cmd_axioms) {
      auto label = label_from_name(ax_class);
      if (!label) throw EvalError("unknown class '" + ax_class + "'");
      AxiomSuiteReport rep = check_axiom_suite(*label, ax_budget);
      out << rep.text();
      return rep.all_valid ? 0 : 1;
    }

    if (*cmd_canonical) {
      ResiduatedLattice L = load_lattice_file(ca_lattice);
      CanonicalFrame cf = canonical_frame(L);
      out << "filters: " << cf.frame.x_size() << '\n';
      out << "ideals: " << cf.frame.y_size() << '\n';
      out << "classes: " << detail::classes_text(cf.frame.classify()) << '\n';
      if (!ca_emit.empty()) {
        std::ofstream of(ca_emit);
        if (!of) throw EvalError("cannot write '" + ca_emit + "'");
        of << cf.frame.to_text();
      }
      if (ca_verify) {
        EmbeddingReport rep = verify_embedding(L);
        out << rep.text();
        return rep.all_pass ? 0 : 1;
      }
      return 0;
    }

    if (*cmd_export) {
      if (x_format == "fof" && !x_reduce)
        throw EvalError("fof output requires --reduce (tff carries the two sorts)");
      if (x_format == "tff" && x_reduce)
        throw EvalError("tff output carries the two sorts; drop --reduce");
      auto label = label_from_name(x_class);
      if (!label) throw EvalError("unknown class '" + x_class + "'");
      VarGen gen;
      FOLPtr body;
      FOLVar v0;
      if (x_mode == "ml2") {
        SortedFormulaPtr f = parse_ml2(x_formula);
        v0 = gen.fresh(vsort_of(f->sort()));
        body = st_ml2(*f, v0, gen);
      } else if (x_mode == "bullet") {
        v0 = gen.fresh(VSort::X);
        body = st_sub_bullet(*parse_sub(x_formula), v0, gen);
      } else {
        v0 = gen.fresh(VSort::Y);
        body = st_sub_circ(*parse_sub(x_formula), v0, gen);
      }
      FOLPtr closed = FOLFormula::forall(v0, body);
      if (x_reduce) closed = sort_reduce(*closed);
      std::vector<TptpUnit> units;
      if (x_axioms)
        for (auto& u : frame_axioms(*label, x_reduce)) units.push_back(u);
      units.push_back({x_name, "conjecture", closed});
      out << emit_tptp_problem(units, x_format == "tff");
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace polarity
