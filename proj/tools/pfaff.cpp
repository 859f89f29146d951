#include <cstdlib>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfaff/lyubeznik.hpp"
#include "pfaff/origin.hpp"
#include "pfaff/partitions.hpp"
#include "pfaff/serialize.hpp"
#include "pfaff/table.hpp"
#include "pfaff/verify.hpp"
#include "pfaff/weights.hpp"

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

void print_poly(const pfaff::BiLaurentPoly& p, bool json) {
  if (json) {
    std::cout << pfaff::to_json(p).dump() << "\n";
  } else {
    std::cout << p.to_string() << "\n";
  }
}

pfaff::BiLaurentPoly localcoh(const std::string& parity, const std::string& object, int m, int index) {
  if (parity == "odd") {
    if (object != "D") throw std::invalid_argument("odd parity supports only --object D");
    return pfaff::h0_D_odd(m, index);
  }
  if (object == "Q") return pfaff::h0_Q(m, index);
  if (object == "D") return pfaff::h0_D_even(m, index);
  return pfaff::h0_pf_pole(m, index);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyubeznik numbers of Pfaffian rings"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;
  std::string format = "json";
  auto* lyub = app.add_subcommand("lyubeznik", "Print the table of nonzero Lyubeznik numbers");
  lyub->add_option("--n", n, "Matrix size")->required();
  lyub->add_option("--k", k, "Rank parameter (rank <= 2k)")->required();
  lyub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "latex"}));

  bool genfun_text = false;
  auto* genfun = app.add_subcommand("genfun", "Print the generating function L_k(q,w)");
  genfun->add_option("--n", n, "Matrix size")->required();
  genfun->add_option("--k", k, "Rank parameter")->required();
  genfun->add_flag("--text", genfun_text, "Human-readable instead of JSON terms");

  std::string parity;
  std::string object;
  int m = 0;
  int index = 0;
  bool lc_json = false;
  auto* lc = app.add_subcommand("localcoh", "Local cohomology at the origin of a D-module");
  lc->add_option("--parity", parity, "Parity of n")->required()->check(CLI::IsMember({"even", "odd"}));
  lc->add_option("--m", m, "n = 2m or 2m+1")->required();
  lc->add_option("--object", object, "Module family")->required()->check(CLI::IsMember({"Q", "D", "pfpole"}));
  lc->add_option("--index", index, "Family index")->required();
  lc->add_flag("--json", lc_json, "Print JSON terms");

  int a = 0;
  int b = 0;
  int power = 1;
  bool gauss_json = false;
  auto* gauss = app.add_subcommand("gaussian", "Gaussian binomial [a choose b]_{q^power}");
  gauss->add_option("--a", a)->required();
  gauss->add_option("--b", b)->required();
  gauss->add_option("--power", power, "Substitute q -> q^power")->check(CLI::PositiveNumber);
  gauss->add_flag("--json", gauss_json, "Print JSON terms");

  std::vector<int> gamma;
  auto* bott_cmd = app.add_subcommand("bott", "Bott's algorithm for a weight of GL_n");
  bott_cmd->add_option("--gamma", gamma, "Comma-separated weight")->required()->delimiter(',')->allow_extra_args(false);

  pfaff::VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Run every verification suite");
  verify->add_option("--n-max", vopts.n_max, "Largest n for table checks")->check(CLI::Range(2, 40));
  verify->add_option("--jobs", vopts.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*lyub) {
      static const std::map<std::string, pfaff::TableFormat> formats = {
          {"json", pfaff::TableFormat::Json}, {"csv", pfaff::TableFormat::Csv}, {"latex", pfaff::TableFormat::Latex}};
      std::cout << pfaff::emit(pfaff::build_table(n, k), formats.at(format));
    } else if (*genfun) {
      const pfaff::BiLaurentPoly L = pfaff::L_closed(n, k);
      pfaff::require_equal(L, pfaff::L_composed(n, k), "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")");
      print_poly(L, !genfun_text);
    } else if (*lc) {
      print_poly(localcoh(parity, object, m, index), lc_json);
    } else if (*gauss) {
      print_poly(pfaff::substitute_power(pfaff::gaussian_binomial(a, b), power), gauss_json);
    } else if (*bott_cmd) {
      if (gamma.empty()) throw std::invalid_argument("--gamma needs at least one entry");
      const pfaff::BottResult r = pfaff::bott(gamma);
      if (r) {
        std::cout << "degree " << r->degree << " weight " << r->weight.to_string() << "\n";
      } else {
        std::cout << "zero\n";
      }
    } else if (*verify) {
      const pfaff::VerifyReport report = pfaff::verify_all(vopts);
      std::cout << report.to_text();
      return report.pass() ? EXIT_SUCCESS : kExitVerification;
    }
  } catch (const pfaff::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return EXIT_SUCCESS;
}
