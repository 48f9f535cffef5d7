// toruskk: exact duality computations on tori.
//
// Subtorus bases enter in the matrix text format "1,0;1,2" (rows split
// by ';', entries by ','); columns are the basis vectors, so "1;1" is
// the single column (1,1). Exterior classes enter as JSON. Output is
// JSON by default, --format text for humans. Exit codes: 0 success,
// 1 failed verification, 2 computational error, 64 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "toruskk/fm.hpp"
#include "toruskk/json_io.hpp"
#include "toruskk/verify.hpp"
#include "toruskk/version.hpp"

namespace {

using namespace toruskk;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitComputeError = 2;
constexpr int kExitUsage = 64;

struct CommonOptions {
  std::string format = "json";
};

void emit(const Json& j, const CommonOptions& common, const std::string& text) {
  if (common.format == "text")
    std::cout << text;
  else
    std::cout << j.dump(2) << "\n";
}

Side parseSide(const std::string& s) {
  if (s == "base") return Side::Base;
  if (s == "dual") return Side::Dual;
  fail(ErrorKind::Parse, "side must be base or dual");
}

std::uint64_t defaultSeed() {
  if (const char* env = std::getenv("TORUSKK_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      fail(ErrorKind::Parse, "TORUSKK_SEED must be an unsigned integer");
    }
  }
  return 0;
}

GradedLinearMap buildNamedMap(const std::string& name, int d) {
  if (name == "fm") return buildFMK(d);
  if (name == "fmh") return buildFMH(d);
  if (name == "pd") return buildPDspin(d);
  if (name == "assembly") return buildAssembly(d);
  fail(ErrorKind::Parse, "unknown map \"" + name + "\" (expected fm, fmh, pd or assembly)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact K-theory/K-homology duality computations on tori"};
  app.set_version_flag("--version", std::string("toruskk ") + kVersion);
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--format", common.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // shared option storage; each subcommand binds the slice it needs
  int d = 0;
  std::string basisText, basis2Text, sideText = "base";
  std::string classText, class2Text;
  std::string mapName;
  std::string varianceText;
  std::uint64_t seed = defaultSeed();
  long long trials = 200;
  int entryBound = 4;
  std::vector<std::string> properties;

  CLI::App* dual = app.add_subcommand("dual", "Pontryagin-dual subtorus with induced orientation");
  dual->add_option("--d", d, "ambient dimension")->required();
  dual->add_option("--basis", basisText, "subtorus basis, columns = basis vectors")->required();
  dual->add_option("--side", sideText, "base or dual");

  CLI::App* expand = app.add_subcommand("expand", "exterior-algebra class of a subtorus");
  expand->add_option("--d", d, "ambient dimension")->required();
  expand->add_option("--basis", basisText, "subtorus basis")->required();
  expand->add_option("--side", sideText, "base or dual");
  expand->add_option("--variance", varianceText, "x (K-theory) or y (K-homology)")
      ->required()
      ->check(CLI::IsMember({"x", "y"}));

  CLI::App* fm = app.add_subcommand("fm", "apply the Fourier-Mukai transform to a class");
  fm->add_option("--class", classText, "exterior class as JSON")->required();

  CLI::App* assembly = app.add_subcommand("assembly", "Baum-Connes assembly of a subtorus homology class");
  assembly->add_option("--d", d, "ambient dimension")->required();
  assembly->add_option("--basis", basisText, "base-side subtorus basis")->required();

  CLI::App* pair = app.add_subcommand("pair", "signed pairing of complementary subtori");
  pair->add_option("--d", d, "ambient dimension")->required();
  pair->add_option("--basis", basisText, "first subtorus basis")->required();
  pair->add_option("--basis2", basis2Text, "second subtorus basis")->required();
  pair->add_option("--side", sideText, "base or dual");

  CLI::App* intersect = app.add_subcommand("intersect", "transversality and oriented intersection data");
  intersect->add_option("--d", d, "ambient dimension")->required();
  intersect->add_option("--basis", basisText, "first subtorus basis")->required();
  intersect->add_option("--basis2", basis2Text, "second subtorus basis")->required();
  intersect->add_option("--side", sideText, "base or dual");

  CLI::App* wedgeCmd = app.add_subcommand("wedge", "wedge product of two classes");
  wedgeCmd->add_option("--class", classText, "first class as JSON")->required();
  wedgeCmd->add_option("--class2", class2Text, "second class as JSON")->required();

  CLI::App* matrixCmd = app.add_subcommand("matrix", "dump a transform matrix on monomial bases");
  matrixCmd->add_option("map", mapName, "fm, fmh, pd or assembly")->required();
  matrixCmd->add_option("--d", d, "ambient dimension")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the seeded property-verification suite");
  verify->add_option("--d", d, "ambient dimension")->default_val(3);
  verify->add_option("--seed", seed, "PRNG seed (default: TORUSKK_SEED or 0)");
  verify->add_option("--trials", trials, "random trials per property");
  verify->add_option("--entry-bound", entryBound, "entry bound for random bases");
  verify->add_option("--property", properties, "run only the named properties")
      ->check(CLI::IsMember(verifyPropertyNames()));

  // let --format appear after the subcommand too
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dual->parsed()) {
      OrientedSubtorus t = makeSubtorus(d, parseSide(sideText), IntMatrix::fromText(basisText));
      OrientedSubtorus result = dualSubtorus(t);
      emit(subtorusToJson(result), common,
           "dual subtorus on side " + std::string(sideName(result.side)) + ": " +
               result.basis.toText() + "\n");
    } else if (expand->parsed()) {
      OrientedSubtorus t = makeSubtorus(d, parseSide(sideText), IntMatrix::fromText(basisText));
      ExteriorClass cls = varianceText == "x" ? expandKTheory(t) : expandHomology(t);
      emit(classToJson(cls), common, cls.describe() + "\n");
    } else if (fm->parsed()) {
      ExteriorClass cls = classFromJson(Json::parse(classText, nullptr, true));
      const AlgebraSpec& spec = cls.spec();
      GradedLinearMap map = [&] {
        if (spec.variance == Variance::X && spec.side == Side::Base) return buildFMK(spec.d);
        if (spec.variance == Variance::Y && spec.side == Side::Dual) return buildFMH(spec.d);
        fail(ErrorKind::SpecMismatch,
             "transform expects an x-type base class or a y-type dual class");
      }();
      ExteriorClass image = applyMap(map, cls);
      emit(classToJson(image), common, image.describe() + "\n");
    } else if (assembly->parsed()) {
      OrientedSubtorus t = makeSubtorus(d, Side::Base, IntMatrix::fromText(basisText));
      ExteriorClass image = assemblyOnSubtorus(t);
      emit(classToJson(image), common, image.describe() + "\n");
    } else if (pair->parsed()) {
      Side side = parseSide(sideText);
      OrientedSubtorus t = makeSubtorus(d, side, IntMatrix::fromText(basisText));
      OrientedSubtorus tp = makeSubtorus(d, side, IntMatrix::fromText(basis2Text));
      Int value = pairingSigned(t, tp);
      Int count = value < 0 ? Int(-value) : value;
      Json j;
      j["pairing"] = intToJson(value);
      j["points"] = intToJson(count);
      emit(j, common, "pairing " + value.str() + " (" + count.str() + " points)\n");
    } else if (intersect->parsed()) {
      Side side = parseSide(sideText);
      OrientedSubtorus t = makeSubtorus(d, side, IntMatrix::fromText(basisText));
      OrientedSubtorus tp = makeSubtorus(d, side, IntMatrix::fromText(basis2Text));
      IntersectionData data = intersectionData(t, tp);
      std::string text = data.transverse
                             ? "transverse, " + data.componentCount.str() +
                                   " component(s), identity component " +
                                   data.identityComponent.basis.toText() + "\n"
                             : "not transverse\n";
      emit(intersectionToJson(data), common, text);
    } else if (wedgeCmd->parsed()) {
      ExteriorClass a = classFromJson(Json::parse(classText, nullptr, true));
      ExteriorClass b = classFromJson(Json::parse(class2Text, nullptr, true));
      ExteriorClass product = wedge(a, b);
      emit(classToJson(product), common, product.describe() + "\n");
    } else if (matrixCmd->parsed()) {
      GradedLinearMap map = buildNamedMap(mapName, d);
      emit(mapToJson(map), common, mapToAlignedText(map));
    } else if (verify->parsed()) {
      VerifyOptions options;
      options.d = d;
      options.seed = seed;
      options.trials = trials;
      options.entryBound = entryBound;
      options.filter = properties;
      VerifyReport report = runVerifySuite(options);
      emit(reportToJson(report), common, formatReport(report));
      return report.allPass() ? kExitOk : kExitVerifyFailed;
    }
    return kExitOk;
  } catch (const Error& e) {
    Json err;
    err["error"]["kind"] = errorKindName(e.kind());
    err["error"]["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return kExitComputeError;
  } catch (const Json::parse_error& e) {
    Json err;
    err["error"]["kind"] = "parse";
    err["error"]["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return kExitComputeError;
  }
}
