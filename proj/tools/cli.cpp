#include "cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "slackmat/combinatorial.hpp"
#include "slackmat/errors.hpp"
#include "slackmat/io.hpp"
#include "slackmat/linalg.hpp"
#include "slackmat/recognition.hpp"
#include "slackmat/verification.hpp"

namespace slackmat::cli {

namespace {

struct Options {
  std::string input;
  std::string second_input;
  std::string vrep;
  std::string hrep;
  std::string out_v;
  std::string out_h;
  std::string out;
  std::string out_polar;
  std::string certificate;
  bool oracle = false;
  bool quiet = false;
  bool force_cone = false;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int check_cone() {
    const Matrix m = load_matrix(opt_.input);
    const RecognitionResult r = is_cone_slack(m);
    if (opt_.oracle && cone_check_via_polytope(m) != r.verdict) return disagreement("cone-via-polytope");
    write_certificate(r);
    say("CONE-SLACK " + verdict_text(r));
    return r.verdict ? kHolds : kFails;
  }

  int check_polytope() {
    const Matrix m = load_matrix(opt_.input);
    const RecognitionResult r = is_polytope_slack(m);
    if (opt_.oracle && r.rank >= 2 && affine_criterion_check(m) != r.verdict) return disagreement("affine criterion");
    write_certificate(r);
    std::string line = "POLYTOPE-SLACK " + verdict_text(r);
    if (r.verdict) line += " dim=" + std::to_string(r.rank - 1);
    say(line);
    return r.verdict ? kHolds : kFails;
  }

  int reconstruct() {
    const Matrix m = load_matrix(opt_.input);
    if (!opt_.force_cone) {
      const RecognitionResult r = is_polytope_slack(m);
      if (r.verdict) {
        save(opt_.out_v, Document{*r.yes->vertices});
        save(opt_.out_h, Document{*r.yes->facets});
        say("RECONSTRUCT polytope dim=" + std::to_string(r.rank - 1) +
            " points=" + std::to_string(r.yes->vertices->points.size()) +
            " inequalities=" + std::to_string(r.yes->facets->inequalities.size()));
        return kHolds;
      }
    }
    const RecognitionResult r = is_cone_slack(m);
    if (!r.verdict) {
      say("RECONSTRUCT no reason=" + std::string(to_string(r.reason)));
      return kFails;
    }
    const ConeRealization c = reconstruct_cone(m);
    save(opt_.out_v, Document{c.generators});
    save(opt_.out_h, Document{c.inequalities});
    say("RECONSTRUCT cone dim=" + std::to_string(c.generators.ambient_dim) +
        " generators=" + std::to_string(c.generators.vectors.size()) +
        " inequalities=" + std::to_string(c.inequalities.vectors.size()));
    return kHolds;
  }

  int slack() {
    const Document v = read_document(opt_.vrep);
    const Document h = read_document(opt_.hrep);
    Matrix s;
    if (v.kind() == DocumentKind::PolyV && h.kind() == DocumentKind::PolyH) {
      s = slack_of_polytope(std::get<PolytopeRep>(v.payload), std::get<PolytopeRep>(h.payload));
    } else if (v.kind() == DocumentKind::ConeV && h.kind() == DocumentKind::ConeH) {
      const auto& cv = std::get<ConeRep>(v.payload);
      const auto& ch = std::get<ConeRep>(h.payload);
      if (!cv.lineality_basis.empty()) throw InvalidInput("slack: generator file carries a lineality section");
      s = slack_of_cone(cv.vector_matrix(), ch.vector_matrix().transpose());
    } else {
      throw InvalidInput("slack: expected POLY_V/POLY_H or CONE_V/CONE_H documents");
    }
    emit(Document{s});
    return kHolds;
  }

  int verify() {
    const Document v = read_document(opt_.vrep);
    const Document h = read_document(opt_.hrep);
    if (v.kind() != DocumentKind::PolyV || h.kind() != DocumentKind::PolyH)
      throw InvalidInput("verify: expected a POLY_V and a POLY_H document");
    const VerificationResult r =
        verify_polytope_equality(std::get<PolytopeRep>(v.payload), std::get<PolytopeRep>(h.payload));
    if (!opt_.certificate.empty()) {
      if (r.certificate)
        write_document(opt_.certificate, Document{Certificate{*r.certificate}});
      else if (!r.equal)
        err_ << "note: no slack certificate for reason " << to_string(r.reason) << '\n';
    }
    say(std::string("VERIFY ") + (r.equal ? "equal" : "not-equal") + " reason=" + std::string(to_string(r.reason)));
    return r.equal ? kHolds : kFails;
  }

  int incidence() {
    emit(Document{incidence_matrix(load_matrix(opt_.input)).to_matrix()});
    return kHolds;
  }

  int polygon_check() {
    const Matrix m = load_matrix(opt_.input);
    const bool yes = polygon_slack_check(m);
    if (opt_.oracle && yes && !is_polytope_slack(m).verdict) return disagreement("polytope slack test");
    say(std::string("POLYGON-SLACK ") + (yes ? "yes" : "no"));
    return yes ? kHolds : kFails;
  }

  int polar_realize() {
    const Matrix m = load_matrix(opt_.input);
    const RecognitionResult a = is_polytope_slack(m);
    const RecognitionResult b = is_polytope_slack(m.transpose());
    if (!a.verdict || !b.verdict) {
      const std::string which = !a.verdict ? "matrix" : "transpose";
      say("POLAR-REALIZE no reason=" + which + "-" + std::string(to_string(!a.verdict ? a.reason : b.reason)));
      return kFails;
    }
    const PolarRealization r = polar_realization(m);
    if (!opt_.out.empty()) write_document(opt_.out, Document{r.polytope});
    if (!opt_.out_polar.empty()) write_document(opt_.out_polar, Document{r.polar_vertices});
    say("POLAR-REALIZE yes scale=" + r.scale.to_string() + " dim=" + std::to_string(r.polytope.ambient_dim));
    return kHolds;
  }

  int verify_cert() {
    const Matrix m = load_matrix(opt_.input);
    const Document d = read_document(opt_.second_input);
    const auto* cert = std::get_if<Certificate>(&d.payload);
    if (!cert) throw InvalidInput("verify-cert: second file is not a CERT document");
    bool ok = false;
    if (const auto* no = std::get_if<NoCertificate>(cert))
      ok = verify_no_certificate(m, *no);
    else
      ok = verify_yes_certificate(m, std::get<YesCertificate>(*cert));
    say(std::string("CERTIFICATE ") + (ok ? "valid" : "invalid"));
    return ok ? kHolds : kFails;
  }

 private:
  static std::string verdict_text(const RecognitionResult& r) {
    std::string s = std::string(r.verdict ? "yes" : "no") + " rank=" + std::to_string(r.rank);
    if (!r.verdict) s += " reason=" + std::string(to_string(r.reason));
    return s;
  }

  Matrix load_matrix(const std::string& path) const {
    Document d = read_document(path);
    auto* m = std::get_if<Matrix>(&d.payload);
    if (!m) throw InvalidInput("'" + path + "' is not a MATRIX document");
    return std::move(*m);
  }

  void write_certificate(const RecognitionResult& r) const {
    if (opt_.certificate.empty()) return;
    if (r.verdict)
      write_document(opt_.certificate, Document{Certificate{*r.yes}});
    else
      write_document(opt_.certificate, Document{Certificate{*r.no}});
  }

  void save(const std::string& path, const Document& d) const {
    if (path.empty())
      emit(d);
    else
      write_document(path, d);
  }

  void emit(const Document& d) const {
    if (!opt_.out.empty())
      write_document(opt_.out, d);
    else if (!opt_.quiet)
      out_ << serialize(d);
  }

  void say(const std::string& line) const {
    if (!opt_.quiet) out_ << line << '\n';
  }

  int disagreement(const std::string& oracle) const {
    err_ << "error: independent check (" << oracle << ") disagrees with the primary verdict\n";
    return kError;
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact recognition of slack matrices of polyhedral cones and polytopes", "slackmat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--oracle", opt.oracle, "Also run the independent check; exit 2 on disagreement");
  app.add_flag("-q,--quiet", opt.quiet, "Suppress standard output");
  app.add_option("--certificate", opt.certificate, "Write the yes/no certificate to this file");

  std::function<int(Session&)> action;
  auto command = [&](const std::string& name, const std::string& help, int (Session::*fn)()) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = [fn](Session& s) { return (s.*fn)(); }; });
    return sub;
  };

  command("check-cone", "Is the matrix a slack matrix of a polyhedral cone?", &Session::check_cone)
      ->add_option("file", opt.input, "MATRIX document")->required();
  command("check-polytope", "Is the matrix a slack matrix of a polytope?", &Session::check_polytope)
      ->add_option("file", opt.input, "MATRIX document")->required();

  auto* rec = command("reconstruct", "Realize a slack matrix as a polytope (or cone)", &Session::reconstruct);
  rec->add_option("file", opt.input, "MATRIX document")->required();
  rec->add_option("--out-v", opt.out_v, "Write the V-representation here");
  rec->add_option("--out-h", opt.out_h, "Write the H-representation here");
  rec->add_flag("--cone", opt.force_cone, "Reconstruct a cone even if a polytope exists");

  auto* sl = command("slack", "Slack matrix of a V/H representation pair", &Session::slack);
  sl->add_option("--vrep", opt.vrep, "POLY_V or CONE_V document")->required();
  sl->add_option("--hrep", opt.hrep, "POLY_H or CONE_H document")->required();
  sl->add_option("--out", opt.out, "Write the matrix here instead of standard output");

  auto* ver = command("verify", "Decide P == Q for a V-polytope Q inside an H-polyhedron P", &Session::verify);
  ver->add_option("--vrep", opt.vrep, "POLY_V document (Q)")->required();
  ver->add_option("--hrep", opt.hrep, "POLY_H document (P)")->required();

  auto* inc = command("incidence", "Print the 0/1 zero pattern of a matrix", &Session::incidence);
  inc->add_option("file", opt.input, "MATRIX document")->required();
  inc->add_option("--out", opt.out, "Write the pattern here instead of standard output");

  command("polygon-check", "Is the matrix a vertex-facet slack matrix of an n-gon?", &Session::polygon_check)
      ->add_option("file", opt.input, "MATRIX document")->required();

  auto* pol = command("polar-realize", "Polytope realizing M whose polar realizes M^T", &Session::polar_realize);
  pol->add_option("file", opt.input, "MATRIX document")->required();
  pol->add_option("--out", opt.out, "Write the polytope (POLY_V) here");
  pol->add_option("--out-polar", opt.out_polar, "Write the polar (POLY_V) here");

  auto* vc = command("verify-cert", "Check a certificate against a matrix", &Session::verify_cert);
  vc->group("");
  vc->add_option("matrix", opt.input, "MATRIX document")->required();
  vc->add_option("certificate", opt.second_input, "CERT document")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kError;
  }

  Session session(opt, out, err);
  try {
    return action(session);
  } catch (const ParseError& e) {
    err << "error: malformed document: " << e.what() << '\n';
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
  } catch (const NotApplicable& e) {
    err << "error: not applicable: " << e.what() << '\n';
  }
  return kError;
}

}  // namespace slackmat::cli
