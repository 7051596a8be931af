// Command-line surface over the tuple-space library: metric file validation,
// canonical embeddings, exact distances, one-point extensions, the
// back-and-forth demo, the disring axiom suite, the divergence witness and
// completion-layer interval queries.
//
// Exit codes: 0 success, 1 validation/invariant failure, 2 usage/parse error.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "ury/algebra.hpp"
#include "ury/completion.hpp"
#include "ury/disring.hpp"
#include "ury/encoding.hpp"
#include "ury/errors.hpp"
#include "ury/extend.hpp"
#include "ury/metricio.hpp"
#include "ury/store.hpp"
#include "ury/upoint.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

int error_exit_code(const ury::Error& e) {
  if (e.kind() == "parse-error" || e.kind() == "malformed-encoding") return kUsage;
  return kFailure;
}

ury::NodeId parse_node(ury::Store& store, const std::string& text) {
  return ury::decode(store, ury::parse_encoding_text(text));
}

std::string node_text(const ury::Store& store, ury::NodeId id) {
  return ury::encoding_to_text(ury::encode(store, id));
}

// A stream spec is an encoding literal or "@diverge".
ury::UPoint parse_stream(ury::Store& store, const std::string& spec) {
  if (spec == "@diverge") return ury::divergent_stream(store);
  return ury::UPoint::exact(store, parse_node(store, spec));
}

int cmd_validate(const std::string& path) {
  ury::load_space(path);
  std::cout << "ok\n";
  return kOk;
}

int cmd_embed(const std::string& path, std::size_t upto) {
  ury::Store store;
  ury::MetricSpace space = ury::load_space(path);
  ury::PartialIsometry f =
      ury::extend_isometry(store, space, {}, std::min(upto, space.enumeration_size()));
  for (const ury::IsometryPair& p : f)
    std::cout << space.label(p.source) << " " << node_text(store, p.image.id) << "\n";
  return kOk;
}

int cmd_dist(const std::string& enc1, const std::string& enc2) {
  ury::Store store;
  ury::NodeId a = parse_node(store, enc1);
  ury::NodeId b = parse_node(store, enc2);
  std::cout << store.distance(a, b).str() << "\n";
  return kOk;
}

int cmd_ext(const std::vector<std::string>& args) {
  if (args.size() % 2 != 0)
    throw CLI::ValidationError("ext expects ENCODING DISTANCE pairs");
  ury::Store store;
  ury::ConstraintList c;
  for (std::size_t i = 0; i < args.size(); i += 2)
    c.push_back({store.quot(parse_node(store, args[i])), ury::Dyadic::parse(args[i + 1])});
  ury::QuotPoint p = ury::ext_d(store, c);
  std::cout << node_text(store, p.id) << "\n";
  return kOk;
}

int cmd_backforth(std::size_t rounds) {
  ury::Store store;
  ury::UryPresentation p1 = ury::shipped_presentation(store);
  ury::UryPresentation p2 = ury::permuted_presentation(p1, 0x0badcafe);
  ury::BackForthState st = ury::back_and_forth(store, p1, p2, rounds);
  for (std::size_t i = 0; i < st.placed1.size(); ++i)
    std::cout << "f: " << node_text(store, st.placed1[i]) << " -> "
              << node_text(store, st.f_images[i]) << "\n";
  std::string err = ury::verify_back_forth(store, st);
  if (!err.empty()) {
    std::cerr << "error invariant-violation: " << err << "\n";
    return kFailure;
  }
  std::cout << "invariants ok after " << rounds << " rounds (" << st.placed1.size()
            << " placed points per side)\n";
  return kOk;
}

int cmd_axioms(const std::string& instance, std::size_t budget) {
  std::vector<std::string> names;
  if (instance.empty())
    names = {"dyadic", "rational", "boolean", "z2"};
  else
    names.push_back(instance);
  bool all_pass = true;
  for (const std::string& n : names) {
    ury::disring::AxiomReport rep = ury::disring::check_instance(n, budget);
    std::cout << rep.str();
    all_pass = all_pass && rep.all_pass();
  }
  return all_pass ? kOk : kFailure;
}

int cmd_diverge(unsigned upto) {
  ury::Store store;
  std::vector<ury::NodeId> s;
  for (unsigned n = 0; n <= upto; ++n) s.push_back(ury::divergent_sequence(store, n));
  for (unsigned n = 0; n <= upto; ++n)
    std::cout << "s_" << n << " = " << node_text(store, s[n]) << "\n";
  bool ok = true;
  std::cout << "distance table:\n";
  for (unsigned k = 0; k <= upto; ++k) {
    for (unsigned l = 0; l <= upto; ++l) {
      ury::Dyadic d = store.distance(s[k], s[l]);
      ury::Dyadic want = k == l ? ury::Dyadic() : ury::Dyadic::pow2_inv(std::min(k, l));
      if (d != want) ok = false;
      std::cout << d.str() << (l == upto ? "\n" : " ");
    }
  }
  if (!ok) {
    std::cerr << "error invariant-violation: distance table deviates from 2^-min(k,l)\n";
    return kFailure;
  }
  std::cout << "table verified: d(s_k, s_l) = 2^-min(k,l) for k != l\n";
  return kOk;
}

int cmd_approx_dist(unsigned precision, const std::string& spec1, const std::string& spec2) {
  ury::Store store;
  ury::UPoint x = parse_stream(store, spec1);
  ury::UPoint y = parse_stream(store, spec2);
  std::cout << ury::dist_upoint(store, x, y, precision).str() << "\n";
  return kOk;
}

int cmd_approx_homotopy(unsigned precision, const std::string& t_text,
                        const std::string& spec_x, const std::string& spec_z) {
  ury::Store store;
  ury::Dyadic t = ury::Dyadic::parse(t_text);
  ury::UPoint x = parse_stream(store, spec_x);
  ury::UPoint z = parse_stream(store, spec_z);
  ury::UPoint h = ury::homotopy(store, t, x, z);
  std::cout << "to x: " << ury::dist_upoint(store, h, x, precision).str() << "\n";
  std::cout << "to z: " << ury::dist_upoint(store, h, z, precision).str() << "\n";
  return kOk;
}

int cmd_approx_fx(unsigned precision, const std::vector<std::string>& pairs,
                  const std::string& probe) {
  if (pairs.size() % 2 != 0)
    throw CLI::ValidationError("fx expects ENCODING DISTANCE pairs before the probe");
  ury::Store store;
  ury::RealConstraintList c;
  for (std::size_t i = 0; i < pairs.size(); i += 2)
    c.push_back({ury::UPoint::exact(store, parse_node(store, pairs[i])),
                 ury::ApproxReal::exact(ury::Dyadic::parse(pairs[i + 1]))});
  ury::NodeId a = parse_node(store, probe);
  std::cout << ury::fx_eval(store, c, a, precision).str() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact model of the universal metric space: tuple store, extensions, completion"};
  app.require_subcommand(1);

  std::string file, enc1, enc2, instance, t_text, probe;
  std::vector<std::string> pairs;
  std::size_t upto = 0, rounds = 3, budget = 1000;
  unsigned precision = 4;

  CLI::App* validate = app.add_subcommand("validate", "validate a metric space file");
  validate->add_option("file", file)->required();

  CLI::App* embed = app.add_subcommand("embed", "canonically embed a metric space file");
  embed->add_option("file", file)->required();
  embed->add_option("--upto", upto, "embed the first N enumerated points")->required();

  CLI::App* dist = app.add_subcommand("dist", "exact distance between two encoded tuples");
  dist->add_option("enc1", enc1)->required();
  dist->add_option("enc2", enc2)->required();

  CLI::App* ext = app.add_subcommand("ext", "one-point extension of (encoding, distance) pairs");
  ext->add_option("pairs", pairs, "ENCODING DISTANCE ...");

  CLI::App* backforth = app.add_subcommand("backforth", "two-presentation back-and-forth demo");
  backforth->add_option("--rounds", rounds);

  CLI::App* axioms = app.add_subcommand("axioms", "disring axiom suite");
  axioms->add_option("--instance", instance, "dyadic|rational|boolean|z2|broken");
  axioms->add_option("--budget", budget);

  CLI::App* diverge = app.add_subcommand("diverge", "divergence witness s_0..s_N");
  diverge->add_option("--upto", upto)->required();

  CLI::App* approx = app.add_subcommand("approx", "completion-layer interval queries");
  approx->add_option("--precision", precision);
  approx->require_subcommand(1);
  CLI::App* adist = approx->add_subcommand("dist", "distance enclosure between streams");
  adist->add_option("spec1", enc1, "encoding or @diverge")->required();
  adist->add_option("spec2", enc2)->required();
  CLI::App* ahom = approx->add_subcommand("homotopy", "contraction-path leg enclosures");
  ahom->add_option("t", t_text, "parameter in [0, 1]")->required();
  ahom->add_option("x", enc1)->required();
  ahom->add_option("z", enc2)->required();
  CLI::App* afx = approx->add_subcommand("fx", "location value at a probe node");
  afx->add_option("--pair", pairs, "ENCODING DISTANCE (repeatable)")->expected(-2);
  afx->add_option("probe", probe)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*embed) return cmd_embed(file, upto);
    if (*dist) return cmd_dist(enc1, enc2);
    if (*ext) return cmd_ext(pairs);
    if (*backforth) return cmd_backforth(rounds);
    if (*axioms) return cmd_axioms(instance, budget);
    if (*diverge) return cmd_diverge(static_cast<unsigned>(upto));
    if (*approx) {
      if (*adist) return cmd_approx_dist(precision, enc1, enc2);
      if (*ahom) return cmd_approx_homotopy(precision, t_text, enc1, enc2);
      if (*afx) return cmd_approx_fx(precision, pairs, probe);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ury::Error& e) {
    std::cerr << "error " << e.kind() << ": " << e.what() << "\n";
    return error_exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error internal: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
