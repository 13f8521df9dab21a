// preproj: command-line front end.
//
// Every subcommand prints a human-readable report followed by `#key:value`
// trailer lines that depend only on the inputs. Exit codes: 0 success,
// 1 computational failure, 2 usage error. PREPROJ_OUT_DIR, if set, receives
// a copy of the report as <subcommand>.txt.

#include "preproj/hh0.hpp"
#include "preproj/morphism.hpp"
#include "preproj/parse.hpp"
#include "preproj/presentation.hpp"
#include "suite.hpp"

#include <CLI11.hpp>
#include <boost/container_hash/hash.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace preproj;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Collects report text and the digest of everything the run read.
class Report {
 public:
  std::ostringstream body;

  void input(std::string_view bytes) { boost::hash_range(digest_, bytes.begin(), bytes.end()); }
  void trailer(const std::string& key, const std::string& value) { trailers_ += "#" + key + ":" + value + "\n"; }

  std::string text() const {
    std::ostringstream os;
    os << body.str() << trailers_ << "#inputs:" << std::hex << std::setw(16) << std::setfill('0') << digest_ << "\n";
    return os.str();
  }

 private:
  std::size_t digest_ = 0;
  std::string trailers_;
};

struct Inputs {
  std::string quiver = "";
  std::string relations = "add";
  std::string field = "Q";
};

DoubledQuiver load_quiver(const std::string& spec, Report& rep) {
  rep.input(spec);
  if (spec.rfind("builtin:", 0) == 0) return DoubledQuiver(builtin_dynkin(spec.substr(8)));
  std::string text = read_file(spec);
  rep.input(text);
  auto qf = parse_quiver_text(text);
  if (qf.order_chain.empty()) return DoubledQuiver(qf.quiver);
  return DoubledQuiver(qf.quiver, qf.order_chain);
}

Presentation build(const DoubledQuiver& dq, const std::string& kind, const ScalarDomain& dom, Report& rep) {
  rep.input(kind);
  if (kind == "add") return additive_relations(dq, dom);
  if (kind == "mult") return multiplicative_relations(star_decompose(dq.base()), dq, dom);
  if (kind.rfind("partial:", 0) == 0) {
    int label = 0;
    try {
      label = std::stoi(kind.substr(8));
    } catch (const std::exception&) {
      throw UsageError("bad vertex in '" + kind + "'");
    }
    auto v = dq.alphabet()->vertex_index(label);
    if (!v) throw UsageError("no vertex " + std::to_string(label));
    return partial_relations(additive_relations(dq, dom), *v);
  }
  throw UsageError("relations must be add, mult or partial:<vertex>, got '" + kind + "'");
}

ScalarDomain domain_of(const std::string& text, Report& rep) {
  rep.input(text);
  try {
    return ScalarDomain::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::string join_dims(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    if (!dims[d]) continue;
    if (!s.empty()) s += ",";
    s += std::to_string(d) + ":" + std::to_string(dims[d]);
  }
  return s;
}

BuchbergerOptions options_for(int max_degree) {
  BuchbergerOptions o;
  if (max_degree > 0) {
    o.cap = max_degree;
    o.adaptive = false;
  }
  return o;
}

// ---------------------------------------------------------------- commands

int cmd_gb(const Inputs& in, int max_degree, Report& rep) {
  auto dq = load_quiver(in.quiver, rep);
  auto dom = domain_of(in.field, rep);
  auto pres = build(dq, in.relations, dom, rep);
  return visit_domain(dom, [&](const auto& d) {
    auto gb = groebner_of(pres, d, options_for(max_degree));
    for (std::size_t i = 0; i < gb.elements().size(); ++i) rep.body << format_poly(gb.element(i)) << "\n";
    rep.trailer("complete", gb.complete ? "true" : "false");
    rep.trailer("elements", std::to_string(gb.elements().size()));
    if (!gb.complete) {
      rep.body << "incomplete: " << gb.diagnostic << "\n";
      return 1;
    }
    try {
      auto basis = gb.enumerate_basis();
      rep.trailer("dims", join_dims(basis.graded_dims()));
      rep.trailer("total", std::to_string(basis.total()));
    } catch (const GroebnerError&) {
      rep.trailer("dims", "infinite");
    }
    return 0;
  });
}

int cmd_nf(const Inputs& in, const std::string& poly, bool membership, Report& rep) {
  auto dq = load_quiver(in.quiver, rep);
  auto dom = domain_of(in.field, rep);
  auto pres = build(dq, in.relations, dom, rep);
  rep.input(poly);
  PolyQ p = PolyQ::zero(dq.alphabet(), RationalDomain::rationals());
  try {
    p = parse_poly(poly, dq.alphabet());
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  return visit_domain(dom, [&](const auto& d) {
    auto gb = groebner_of(pres, d);
    auto x = convert(p, d);
    if (!membership) {
      auto nf = gb.normal_form(x);
      rep.body << format_poly(nf) << "\n";
      rep.trailer("nf", format_poly(nf));
      rep.trailer("complete", gb.complete ? "true" : "false");
      return gb.complete ? 0 : 1;
    }
    auto m = gb.is_member(x);
    rep.body << (m.member ? "member" : "not a member") << (m.certified ? "" : " (not certified: basis incomplete)")
             << "\n";
    rep.trailer("member", m.member ? "true" : "false");
    rep.trailer("certified", m.certified ? "true" : "false");
    return m.certified ? 0 : 1;
  });
}

int cmd_hh0(const Inputs& in, const std::vector<unsigned>& primes, Report& rep) {
  auto dq = load_quiver(in.quiver, rep);
  auto dom = domain_of(in.field, rep);
  auto pres = build(dq, in.relations, dom.is_field() ? dom : ScalarDomain::integers(), rep);
  for (unsigned p : primes) rep.input(std::to_string(p));
  HH0Report r;
  if (dom.kind == ScalarDomain::Kind::Integers) {
    r = hh0_integers(pres, primes.empty() ? std::vector<unsigned>{2, 3, 5, 7} : primes);
  } else if (dom.is_field()) {
    r = hh0_field(pres, dom);
  } else {
    throw UsageError("hh0 takes Q, Fp:<p> or Z");
  }
  rep.body << format_report(r);
  rep.trailer("method", r.method_name());
  rep.trailer("total", std::to_string(r.total.rank));
  rep.trailer("torsion_summands", std::to_string(r.torsion_summands()));
  for (const auto& d : r.degrees) {
    std::string t;
    for (const auto& x : d.torsion) t += (t.empty() ? "" : "+") + std::string("Z/") + x.get_str();
    for (const auto& [p, k] : d.p_torsion) t += (t.empty() ? "" : "+") + std::to_string(k) + "xZ/" + std::to_string(p) + "^k";
    rep.trailer("degree", std::to_string(d.degree) + ":" + std::to_string(d.rank) + (t.empty() ? "" : ":" + t));
  }
  if (dom.is_field()) rep.trailer("frobenius_obstructed", frobenius_obstruction(r, pres) ? "true" : "false");
  return 0;
}

int cmd_dims(const Inputs& in, Report& rep) {
  auto dq = load_quiver(in.quiver, rep);
  auto pres = build(dq, in.relations, ScalarDomain::rationals(), rep);
  auto gb = groebner_of(pres, RationalDomain::rationals());
  if (!gb.complete) {
    rep.body << "incomplete: " << gb.diagnostic << "\n";
    rep.trailer("complete", "false");
    return 1;
  }
  auto basis = gb.enumerate_basis();
  auto [N, M] = corrected_space_dims(*dq.alphabet(), basis);
  rep.body << "N=" << N << " M=" << M << "\n";
  rep.body << "dim=" << basis.total() << " top degree " << basis.top_degree() << "\n";
  rep.trailer("N", std::to_string(N));
  rep.trailer("M", std::to_string(M));
  rep.trailer("dim", std::to_string(basis.total()));
  rep.trailer("dims", join_dims(basis.graded_dims()));
  return 0;
}

int cmd_verify(const std::string& name, Report& rep) {
  rep.input(name);
  std::vector<std::string> names;
  if (name == "all") {
    names = paper_iso_names();
  } else {
    auto known = paper_iso_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) throw UsageError("unknown table '" + name + "'");
    names = {name};
  }
  bool all_ok = true;
  for (const auto& n : names) {
    auto t = paper_iso(n);
    rep.body << n << "\n";
    rep.body << "  load           pass  (" << t.doubled.alphabet()->num_letters() << " letters)\n";
    auto source = multiplicative_relations(star_decompose(t.doubled.base()), t.doubled, ScalarDomain::rationals());
    auto gb = groebner_of(additive_relations(t.doubled, ScalarDomain::rationals()), RationalDomain::rationals());
    int top = gb.enumerate_basis().top_degree();
    auto cert = verify_descends(t.map, source, gb, top);
    rep.body << "  descends       " << (cert.descends ? "pass" : "fail") << "  (" << cert.relations_checked
             << " relations, truncation " << top << ")\n";
    for (const auto& f : cert.failures) rep.body << "    remainder at vertex index " << f.vertex << ": " << f.remainder << "\n";
    bool uni = is_unitriangular(t.map, gb);
    rep.body << "  unitriangular  " << (uni ? "pass" : "fail") << "\n";
    auto primes = denominator_primes(t.map);
    bool subset = std::all_of(primes.begin(), primes.end(), [&](unsigned p) {
      return std::find(t.bad_primes.begin(), t.bad_primes.end(), p) != t.bad_primes.end();
    });
    std::string ps;
    for (auto p : primes) ps += (ps.empty() ? "" : ",") + std::to_string(p);
    rep.body << "  denominators   " << (subset ? "pass" : "fail") << "  {" << ps << "}\n";
    bool ok = cert.descends && uni && subset;
    all_ok = all_ok && ok;
    rep.trailer("verify", n + ":" + (ok ? "pass" : "fail"));
    rep.trailer("truncation", n + ":" + std::to_string(top));
  }
  return all_ok ? 0 : 1;
}

int cmd_apply(const Inputs& in, const std::string& map_file, const std::string& poly, const std::string& reduce,
              Report& rep) {
  auto dq = load_quiver(in.quiver, rep);
  std::string text = read_file(map_file);
  rep.input(text);
  rep.input(poly);
  const auto& A = dq.alphabet();
  GeneratorImages m;
  PolyQ p = PolyQ::zero(dq.alphabet(), RationalDomain::rationals());
  try {
    m = parse_map(text, A, A);
    p = parse_poly(poly, A);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  PolyQ image = apply(m, p);
  if (!reduce.empty()) {
    auto gb = groebner_of(build(dq, reduce, ScalarDomain::rationals(), rep), RationalDomain::rationals());
    image = gb.normal_form(image);
  }
  rep.body << format_poly(image) << "\n";
  rep.trailer("image", format_poly(image));
  return 0;
}

int cmd_reproduce(const std::vector<std::string>& only, const std::string& field, Report& rep) {
  suite::Options opts;
  for (const auto& o : only) {
    rep.input(o);
    bool known = false;
    for (const auto& c : suite::checks()) known = known || o == std::to_string(c.id) || o == c.tag;
    if (!known) throw UsageError("unknown check '" + o + "'");
    opts.only.insert(o);
  }
  if (!field.empty()) {
    auto dom = domain_of(field, rep);
    if (dom.kind == ScalarDomain::Kind::PrimeField) opts.prime = dom.modulus;
    else if (dom.kind != ScalarDomain::Kind::Rationals) throw UsageError("--field takes Q or a prime field");
  }
  int failed = 0, passed = 0;
  suite::run(opts, [&](const suite::CheckResult& r) {
    std::ostringstream line;
    line << "[" << std::setw(2) << r.id << "] " << std::left << std::setw(7) << suite::status_name(r.status)
         << std::right;
    if (r.status != suite::Status::Skipped)
      line << std::fixed << std::setprecision(1) << std::setw(6) << r.seconds << "s/" << r.budget << "s  ";
    else
      line << std::string(16, ' ');
    line << r.title << "\n";
    for (const auto& d : r.details) line << "       " << d << "\n";
    // Stream as we go; the trailer carries no timings.
    std::cout << line.str() << std::flush;
    rep.body << line.str();
    rep.trailer("check", std::to_string(r.id) + ":" + suite::status_name(r.status));
    if (r.status == suite::Status::Fail) ++failed;
    if (r.status == suite::Status::Pass) ++passed;
  });
  rep.trailer("passed", std::to_string(passed));
  rep.trailer("failed", std::to_string(failed));
  return failed ? 1 : 0;
}

void emit(const std::string& subcommand, const Report& rep, bool streamed) {
  std::string text = rep.text();
  if (streamed) {
    // The body has already been printed.
    std::cout << text.substr(rep.body.str().size());
  } else {
    std::cout << text;
  }
  if (const char* dir = std::getenv("PREPROJ_OUT_DIR")) {
    std::filesystem::create_directories(dir);
    std::ofstream(std::filesystem::path(dir) / (subcommand + ".txt")) << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Preprojective algebras: Groebner bases, HH0 and isomorphism checks"};
  app.require_subcommand(1);

  Inputs in;
  int max_degree = 0;
  std::string poly, paper, map_file, reduce, field_override;
  std::vector<unsigned> primes;
  std::vector<std::string> only;

  auto add_quiver = [&](CLI::App* c) {
    c->add_option("--quiver", in.quiver, "builtin:<Dynkin name> or a quiver file")->required();
  };
  auto add_relations = [&](CLI::App* c, const char* flag) {
    c->add_option(flag, in.relations, "add, mult or partial:<vertex>")->capture_default_str();
  };
  auto add_field = [&](CLI::App* c) { c->add_option("--field", in.field, "Q, Z, F<p> or Fp:<p>")->capture_default_str(); };

  auto* gb = app.add_subcommand("gb", "Groebner basis and graded dimensions");
  add_quiver(gb);
  add_relations(gb, "--relations");
  add_field(gb);
  gb->add_option("--max-degree", max_degree, "largest overlap degree to process (0: automatic)");

  auto* nf = app.add_subcommand("nf", "normal form of a polynomial");
  add_quiver(nf);
  add_relations(nf, "--relations");
  add_field(nf);
  nf->add_option("--poly", poly, "polynomial expression")->required();

  auto* member = app.add_subcommand("member", "ideal membership of a polynomial");
  add_quiver(member);
  add_relations(member, "--relations");
  add_field(member);
  member->add_option("--poly", poly, "polynomial expression")->required();

  auto* hh0 = app.add_subcommand("hh0", "zeroth Hochschild homology");
  add_quiver(hh0);
  add_relations(hh0, "--algebra");
  add_field(hh0);
  hh0->add_option("--primes", primes, "primes for the comparison over Z, e.g. 2,3,5,7")->delimiter(',');

  auto* dims = app.add_subcommand("dims", "corrected space dimensions N and M");
  add_quiver(dims);
  add_relations(dims, "--relations");

  auto* verify = app.add_subcommand("verify", "check a shipped isomorphism table");
  verify->add_option("--paper", paper, "D4..D8, D4-small, E6, E7, E8, the -alt spellings, or all")->required();

  auto* applyc = app.add_subcommand("apply", "apply a map file to a polynomial");
  add_quiver(applyc);
  applyc->add_option("--map", map_file, "map file")->required();
  applyc->add_option("--poly", poly, "polynomial expression")->required();
  applyc->add_option("--reduce", reduce, "reduce the image modulo add, mult or partial:<vertex>");

  auto* repro = app.add_subcommand("reproduce-paper", "run the full reproduction suite");
  repro->add_option("--only", only, "check ids or tags, comma separated")->delimiter(',');
  repro->add_option("--field", field_override, "also check the isomorphisms over this prime field");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  Report rep;
  rep.input(sub->get_name());
  int code = 0;
  try {
    if (sub == gb) code = cmd_gb(in, max_degree, rep);
    else if (sub == nf) code = cmd_nf(in, poly, false, rep);
    else if (sub == member) code = cmd_nf(in, poly, true, rep);
    else if (sub == hh0) code = cmd_hh0(in, primes, rep);
    else if (sub == dims) code = cmd_dims(in, rep);
    else if (sub == verify) code = cmd_verify(paper, rep);
    else if (sub == applyc) code = cmd_apply(in, map_file, poly, reduce, rep);
    else if (sub == repro) code = cmd_reproduce(only, field_override, rep);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const QuiverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
  emit(sub->get_name(), rep, sub == repro);
  return code;
}
