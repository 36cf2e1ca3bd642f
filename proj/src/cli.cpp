#include "qint/cli.hpp"

#include "qint/expr.hpp"
#include "qint/funceq.hpp"
#include "qint/json_io.hpp"
#include "qint/quantum.hpp"
#include "qint/setops.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qint {

namespace {

struct Report {
  int code = 0;
  Json json;
  std::string plain;
};

Report make_report(int code, const std::string& status, Json value, Json witness,
                   const std::string& rendering) {
  Report r;
  r.code = code;
  r.json["status"] = status;
  r.json["value"] = std::move(value);
  r.json["witness"] = std::move(witness);
  r.json["rendering"] = rendering;
  r.plain = rendering;
  return r;
}

Json eval_value_json(const Value& v) {
  Json j = Json::object();
  if (const QuantumNumber* qn = std::get_if<QuantumNumber>(&v)) {
    j["type"] = "quantum";
    j["x"] = to_string(qn->value());
    j["canonical"] = to_string(qn->canonical());
    return j;
  }
  if (std::holds_alternative<Int>(v)) {
    j["type"] = "integer";
  } else if (std::holds_alternative<Rational>(v)) {
    j["type"] = "rational";
  } else if (std::holds_alternative<FracPoly>(v)) {
    j["type"] = "polynomial";
  } else {
    j["type"] = "set";
  }
  j["canonical"] = render_value(v);
  return j;
}

std::string witness_line(const FeWitness& w) {
  std::ostringstream os;
  os << "violation at (" << w.m << ", " << w.n << "): " << to_string(w.lhs)
     << " != " << to_string(w.rhs);
  return os.str();
}

Report do_eval(const std::string& src) {
  Expr e = parse_expr(src);
  Value v = eval_expr(e);
  return make_report(0, "ok", eval_value_json(v), Json(), render_display(e, v));
}

Report do_verify_ring(long long bound) {
  RingLawReport r = verify_ring_laws(static_cast<int>(bound));
  Json value = Json::object();
  value["pairs_checked"] = r.pairs_checked;
  value["triples_checked"] = r.triples_checked;
  Json witness;
  std::string rendering = "all identities verified";
  if (!r.pass) {
    const RingLawViolation& v = r.violations.front();
    witness = Json::object();
    witness["law"] = v.law;
    Json operands = Json::array();
    std::ostringstream os;
    os << "identity violated: " << v.law << " at (";
    for (std::size_t i = 0; i < v.operands.size(); ++i) {
      operands.push_back(v.operands[i].str());
      os << (i ? ", " : "") << v.operands[i].str();
    }
    os << ")";
    witness["operands"] = operands;
    rendering = os.str();
  }
  return make_report(r.pass ? 0 : 1, r.pass ? "pass" : "fail", std::move(value),
                     std::move(witness), rendering);
}

Report do_verify_fe(bool additive, const std::string& h_text, long long n) {
  FracPoly h = parse_poly_text(h_text);
  PolySequence s = afe_construct(h, n);
  FeVerdict v = additive ? check_afe(s) : check_mfe(s);
  Json value = Json::object();
  value["equation"] = v.equation;
  value["h"] = to_string(h);
  value["n"] = n;
  Json witness = v.witness ? to_json(*v.witness) : Json();
  std::string rendering =
      v.pass ? "all identities verified" : witness_line(*v.witness);
  return make_report(v.pass ? 0 : 1, v.pass ? "pass" : "fail", std::move(value),
                     std::move(witness), rendering);
}

Report do_classify(const std::string& h_text, long long n) {
  FracPoly h = parse_poly_text(h_text);
  Classification c = classify_joint(afe_construct(h, n));
  Json value = Json::object();
  value["h"] = to_string(h);
  value["n"] = n;
  Json witness;
  std::string rendering = to_string(c.kind);
  if (c.failed && c.failed->witness) {
    witness = to_json(*c.failed->witness, c.failed->equation);
    std::ostringstream os;
    os << rendering << " (" << c.failed->equation << " violated at ("
       << c.failed->witness->m << ", " << c.failed->witness->n << "))";
    rendering = os.str();
  }
  const bool joint = (c.kind != JointKind::NotJoint);
  return make_report(joint ? 0 : 1, to_string(c.kind), std::move(value),
                     std::move(witness), rendering);
}

Report do_multiterm(bool additive, const std::vector<long long>& ms) {
  MultitermVerdict v =
      additive ? verify_multiterm_sum(ms) : verify_multiterm_product(ms);
  Json value = Json::object();
  value["expected"] = to_string(v.expected);
  value["actual"] = to_string(v.actual);
  std::string rendering = "all identities verified";
  if (!v.pass) {
    rendering = "violation: expected " + to_string(v.expected) + ", got " +
                to_string(v.actual);
  }
  return make_report(v.pass ? 0 : 1, v.pass ? "pass" : "fail", std::move(value),
                     Json(), rendering);
}

Report do_decompose(bool additive, const std::vector<long long>& ms) {
  DecompositionProof proof = additive ? partition_add_r(ms) : decompose_mul_r(ms);
  std::ostringstream os;
  for (std::size_t i = 0; i < proof.parts.size(); ++i) {
    if (i > 0) {
      os << (additive ? " u " : " (+) ");
    }
    os << to_string(proof.parts[i]);
  }
  os << " = " << to_string(proof.whole);
  std::string rendering = os.str();
  if (!proof.pass) {
    rendering += "\nFAIL: " + *proof.witness;
  }
  Json witness = proof.witness ? Json(*proof.witness) : Json();
  return make_report(proof.pass ? 0 : 1, proof.pass ? "pass" : "fail",
                     to_json(proof), std::move(witness), rendering);
}

Report do_genfun(const std::string& set_text) {
  IntSet s = parse_set_text(set_text);
  FracPoly p = genfun(s);
  Json value = Json::object();
  value["type"] = "polynomial";
  value["canonical"] = to_string(p);
  return make_report(0, "ok", std::move(value), Json(), to_string(p));
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Exact arithmetic for quantum integers, quantum rationals, and "
               "integer-set decompositions"};
  app.require_subcommand(1);
  // The short -h form is dropped everywhere so that verification
  // subcommands can spell their polynomial flag --h.
  app.set_help_flag("--help", "print this help message and exit");

  bool json_out = false;
  std::string out_path;
  auto add_common = [&](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print this help message and exit");
    cmd->add_flag("--json", json_out, "print the report as JSON");
    cmd->add_option("--out", out_path, "also write the JSON report to a file");
  };

  std::string expr_text;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
  eval_cmd->add_option("expr", expr_text, "expression to evaluate")->required();
  add_common(eval_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification");
  verify_cmd->require_subcommand(1);
  verify_cmd->set_help_flag("--help", "print this help message and exit");

  long long bound = 10;
  CLI::App* ring_cmd =
      verify_cmd->add_subcommand("ring", "check the quantum arithmetic laws on "
                                         "all integers up to a bound");
  ring_cmd->add_option("--bound", bound, "largest |n| to check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(ring_cmd);

  std::string h_text;
  long long seq_len = 20;
  CLI::App* afe_cmd = verify_cmd->add_subcommand(
      "afe", "construct f_n = h*[n]_q and check the additive equation");
  CLI::App* mfe_cmd = verify_cmd->add_subcommand(
      "mfe", "construct f_n = h*[n]_q and check the multiplicative equation");
  for (CLI::App* cmd : {afe_cmd, mfe_cmd}) {
    add_common(cmd);
    cmd->add_option("--h", h_text, "polynomial h in canonical text form")
        ->required();
    cmd->add_option("--n", seq_len, "sequence length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  std::vector<long long> ms;
  CLI::App* multisum_cmd = verify_cmd->add_subcommand(
      "multisum", "check the r-term quantum addition identity");
  CLI::App* multiprod_cmd = verify_cmd->add_subcommand(
      "multiprod", "check the r-factor quantum multiplication identity");
  for (CLI::App* cmd : {multisum_cmd, multiprod_cmd}) {
    cmd->add_option("--ms", ms, "comma separated positive integers")
        ->required()
        ->delimiter(',');
    add_common(cmd);
  }

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "classify f_n = h*[n]_q against both functional equations");
  add_common(classify_cmd);
  classify_cmd->add_option("--h", h_text, "polynomial h in canonical text form")
      ->required();
  classify_cmd->add_option("--n", seq_len, "sequence length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "build and verify interval decompositions");
  decompose_cmd->require_subcommand(1);
  decompose_cmd->set_help_flag("--help", "print this help message and exit");
  CLI::App* dec_add_cmd = decompose_cmd->add_subcommand(
      "add", "partition [sum] into translated intervals");
  CLI::App* dec_mul_cmd = decompose_cmd->add_subcommand(
      "mul", "decompose [product] into a direct sum of dilated intervals");
  for (CLI::App* cmd : {dec_add_cmd, dec_mul_cmd}) {
    cmd->add_option("--ms", ms, "comma separated positive integers")
        ->required()
        ->delimiter(',');
    add_common(cmd);
  }

  std::string set_text;
  CLI::App* genfun_cmd =
      app.add_subcommand("genfun", "generating function of a set");
  genfun_cmd->add_option("--set", set_text, "set expression, e.g. \"{0, 2}\" or \"[5]\"")
      ->required();
  add_common(genfun_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  auto write_out_file = [&](const Json& report) -> bool {
    if (out_path.empty()) {
      return true;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << out_path << "\n";
      return false;
    }
    f << report.dump(2) << "\n";
    return true;
  };

  try {
    Report report;
    if (eval_cmd->parsed()) {
      report = do_eval(expr_text);
    } else if (ring_cmd->parsed()) {
      report = do_verify_ring(bound);
    } else if (afe_cmd->parsed() || mfe_cmd->parsed()) {
      report = do_verify_fe(afe_cmd->parsed(), h_text, seq_len);
    } else if (classify_cmd->parsed()) {
      report = do_classify(h_text, seq_len);
    } else if (multisum_cmd->parsed() || multiprod_cmd->parsed()) {
      report = do_multiterm(multisum_cmd->parsed(), ms);
    } else if (dec_add_cmd->parsed() || dec_mul_cmd->parsed()) {
      report = do_decompose(dec_add_cmd->parsed(), ms);
    } else {
      report = do_genfun(set_text);
    }
    if (json_out) {
      out << report.json.dump(2) << "\n";
    } else {
      out << report.plain << "\n";
    }
    if (!write_out_file(report.json)) {
      return 2;
    }
    return report.code;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const TypeError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const EvalError& e) {
    Json report;
    report["status"] = "error";
    report["value"] = Json();
    report["witness"] = Json();
    report["rendering"] = e.what();
    if (json_out) {
      out << report.dump(2) << "\n";
    } else {
      err << e.what() << "\n";
    }
    write_out_file(report);
    return 1;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qint
