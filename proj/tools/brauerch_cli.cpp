// Command-line front end. Everything goes through the C interface.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "brauerch/brauerch.h"

namespace {

constexpr int kUsage = 2;

struct Owned {
  char* s = nullptr;
  ~Owned() { brauerch_string_free(s); }
};

int fail(brauerch_status st) {
  std::cerr << "error: " << brauerch_last_error() << '\n';
  return static_cast<int>(st);
}

int emit(brauerch_status st, Owned& out) {
  if (st != BRAUERCH_OK) return fail(st);
  std::fputs(out.s, stdout);
  return 0;
}

struct GroupArgs {
  std::string group;
  int N = 0;
  std::optional<int> n;

  void attach(CLI::App* cmd, bool need_group = true) {
    auto* g = cmd->add_option("--group", group, "gl, orthogonal or sp");
    auto* N_opt = cmd->add_option("--N", N, "dimension of the vector space");
    if (need_group) {
      g->required();
      N_opt->required();
    }
    cmd->add_option("--n", n, "rank; must equal floor(N/2) when given");
  }

  // Returns 0 or an exit code.
  int resolve(int& family) const {
    const brauerch_status st = brauerch_parse_family(group.c_str(), &family);
    if (st != BRAUERCH_OK) return fail(st);
    if (n && *n != N / 2) {
      std::cerr << "error: --n " << *n << " does not match floor(N/2) = " << N / 2 << " for N = " << N << '\n';
      return BRAUERCH_DOMAIN_ERROR;
    }
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic maps for the Brauer algebra, exact arithmetic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(brauerch_version()));

  std::string lambda, nu, rho, at, eps = "0", suite = "all", method = "theorem";
  bool json = false, force = false, count = false;
  int m = 0, max_m = 4;
  std::size_t tableau = 0;
  std::vector<int> N_list;
  GroupArgs ga;

  auto* dims = app.add_subcommand("dims", "dimension of an irreducible representation");
  dims->add_option("--lambda", lambda, "shape, e.g. 2,1 (the row label for sp)")->required();
  ga.attach(dims);
  dims->add_flag("--json", json);

  auto* idem = app.add_subcommand("idempotent", "primitive idempotent E_T in the tensor representation");
  idem->add_option("--lambda", lambda, "shape")->required();
  idem->add_option("--tableau", tableau, "index of the standard tableau (0-based, enumeration order)");
  ga.attach(idem);
  idem->add_flag("--json", json, "emit sparse triples");
  idem->add_flag("--force-large", force, "allow N^m above 10^6");

  auto* chmap = app.add_subcommand("chmap", "image of the central idempotent under ch");
  chmap->add_option("--lambda", lambda, "shape")->required();
  ga.attach(chmap);
  chmap->add_option("--method", method, "theorem or oracle")->check(CLI::IsMember({"theorem", "oracle"}));
  chmap->add_flag("--json", json);
  chmap->add_flag("--force-large", force, "allow N^m above 10^6");

  auto* schur = app.add_subcommand("schur", "Schur polynomial s_nu(x_1..x_n)");
  schur->add_option("--nu", nu, "partition")->required();
  int schur_n = 0;
  schur->add_option("--n", schur_n, "number of variables")->required();
  schur->add_flag("--json", json);

  auto* dschur = app.add_subcommand("double-schur", "double Schur polynomial s_nu(x | a) at a point");
  dschur->add_option("--nu", nu, "partition")->required();
  int ds_n = 0;
  auto* ds_n_opt = dschur->add_option("--n", ds_n, "number of variables");
  dschur->add_option("--eps", eps, "0, 1/2, 1, or zero for a_i = 0");
  std::string ds_group;
  int ds_N = 0;
  auto* ds_group_opt = dschur->add_option("--group", ds_group, "orthogonal or sp: derive eps and n from N");
  dschur->add_option("--N", ds_N, "dimension, with --group")->needs(ds_group_opt);
  auto* at_opt = dschur->add_option("--at", at, "comma-separated rational point");
  auto* rho_opt = dschur->add_option("--rho", rho, "evaluate at a_rho");
  at_opt->excludes(rho_opt);
  dschur->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"relations", "idempotents", "dims", "charmap", "all"}));
  verify->add_option("--max-m", max_m, "largest number of tensor factors")->check(CLI::Range(1, 6));
  verify->add_option("--N", N_list, "comma-separated dimensions")->delimiter(',');
  verify->add_flag("--json", json);

  auto* basis = app.add_subcommand("basis", "Brauer diagrams on 2m dots");
  basis->add_option("--m", m)->required();
  basis->add_flag("--count", count, "print only the count");
  basis->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  Owned out;
  int family = 0;
  if (dims->parsed()) {
    if (int rc = ga.resolve(family)) return rc;
    return emit(brauerch_dimension_report(lambda.c_str(), family, ga.N, json, &out.s), out);
  }
  if (idem->parsed()) {
    if (int rc = ga.resolve(family)) return rc;
    brauerch_operator* op = nullptr;
    brauerch_status st = brauerch_idempotent(lambda.c_str(), tableau, family, ga.N, force, &op);
    if (st != BRAUERCH_OK) return fail(st);
    if (json) {
      st = brauerch_operator_json(op, &out.s);
    } else {
      Owned t, tr;
      st = brauerch_tableau_text(lambda.c_str(), tableau, &t.s);
      if (st == BRAUERCH_OK) st = brauerch_operator_trace(op, &tr.s);
      if (st == BRAUERCH_OK) {
        std::cout << "tableau    " << t.s << '\n'
                  << "dimension  " << brauerch_operator_dimension(op) << '\n'
                  << "nonzeros   " << brauerch_operator_nnz(op) << '\n'
                  << "trace      " << tr.s << '\n';
      }
    }
    brauerch_operator_free(op);
    if (st != BRAUERCH_OK) return fail(st);
    if (out.s != nullptr) std::fputs(out.s, stdout);
    return 0;
  }
  if (chmap->parsed()) {
    if (int rc = ga.resolve(family)) return rc;
    brauerch_image* image = nullptr;
    const int how = method == "oracle" ? BRAUERCH_CH_ORACLE : BRAUERCH_CH_THEOREM;
    brauerch_status st = brauerch_chmap(lambda.c_str(), family, ga.N, how, force, &image);
    if (st != BRAUERCH_OK) return fail(st);
    st = json ? brauerch_image_json(image, &out.s) : brauerch_image_text(image, &out.s);
    brauerch_image_free(image);
    return emit(st, out);
  }
  if (schur->parsed()) return emit(brauerch_schur(nu.c_str(), schur_n, json, &out.s), out);
  if (dschur->parsed()) {
    if (!ds_group.empty()) {
      if (brauerch_status st = brauerch_parse_family(ds_group.c_str(), &family); st != BRAUERCH_OK) return fail(st);
      if (family == BRAUERCH_GL) {
        std::cerr << "error: --group for double-schur must be orthogonal or sp\n";
        return BRAUERCH_DOMAIN_ERROR;
      }
      if (ds_N < 1 || (family == BRAUERCH_SYMPLECTIC && ds_N % 2 != 0) || (family == BRAUERCH_ORTHOGONAL && ds_N < 2)) {
        std::cerr << "error: --N " << ds_N << " is not valid for --group " << ds_group << '\n';
        return BRAUERCH_DOMAIN_ERROR;
      }
      if (*ds_n_opt && ds_n != ds_N / 2) {
        std::cerr << "error: --n " << ds_n << " does not match floor(N/2) = " << ds_N / 2 << '\n';
        return BRAUERCH_DOMAIN_ERROR;
      }
      ds_n = ds_N / 2;
      eps = family == BRAUERCH_SYMPLECTIC ? "1" : (ds_N % 2 == 0 ? "0" : "1/2");
    } else if (!*ds_n_opt) {
      std::cerr << "error: double-schur needs --n or --group with --N\n";
      return kUsage;
    }
    if (!*at_opt && !*rho_opt) {
      std::cerr << "error: double-schur needs --at or --rho\n";
      return kUsage;
    }
    return emit(brauerch_double_schur(nu.c_str(), ds_n, eps.c_str(), *at_opt ? at.c_str() : nullptr,
                                      *rho_opt ? rho.c_str() : nullptr, json, &out.s),
                out);
  }
  if (verify->parsed()) {
    int passed = 0;
    const brauerch_status st = brauerch_verify(suite.c_str(), max_m, N_list.empty() ? nullptr : N_list.data(),
                                               N_list.size(), json, &out.s, &passed);
    if (st != BRAUERCH_OK) return fail(st);
    std::fputs(out.s, stdout);
    return passed ? 0 : 1;
  }
  if (basis->parsed()) return emit(brauerch_basis(m, count, json, &out.s), out);
  return kUsage;
}
