#include "brauerch/brauerch.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "brauerch/brauer.hpp"
#include "brauerch/charmap.hpp"
#include "brauerch/error.hpp"
#include "brauerch/groups.hpp"
#include "brauerch/serialize.hpp"
#include "brauerch/symfunc.hpp"
#include "brauerch/tensorrep.hpp"
#include "brauerch/verify.hpp"

struct brauerch_image {
  brauerch::ChImage value;
};

struct brauerch_operator {
  brauerch::TensorOperator value;
};

namespace {

using namespace brauerch;

thread_local std::string last_error;

// Malformed text or arguments, as opposed to a violated mathematical bound.
class UsageError : public Error {
 public:
  using Error::Error;
};

template <class F>
brauerch_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return BRAUERCH_OK;
  } catch (const UsageError& e) {
    last_error = e.what();
    return BRAUERCH_USAGE_ERROR;
  } catch (const InternalError& e) {
    last_error = e.what();
    return BRAUERCH_INTERNAL_ERROR;
  } catch (const Error& e) {
    last_error = e.what();
    return BRAUERCH_DOMAIN_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BRAUERCH_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BRAUERCH_INTERNAL_ERROR;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* message) {
  if (!condition) throw UsageError(message);
}

Partition parse_partition(const char* text, const char* flag) {
  require(text != nullptr, "missing partition");
  try {
    return Partition::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

GroupKind make_kind(int family, int N) {
  switch (family) {
    case BRAUERCH_GL: return GroupKind::gl(N);
    case BRAUERCH_ORTHOGONAL: return GroupKind::orthogonal(N);
    case BRAUERCH_SYMPLECTIC: return GroupKind::symplectic(N);
    default: throw UsageError("unknown group family code " + std::to_string(family));
  }
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> point;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      point.push_back(Rational::parse(item));
    } catch (const Error& e) {
      throw UsageError(std::string("--at: ") + e.what());
    }
  }
  return point;
}

// Two-column text with the first column padded to a common width.
std::string aligned(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

std::string image_text(const ChImage& image) {
  std::ostringstream os;
  os << aligned({{"lambda", paren(image.lambda)},
                 {"group", image.kind.family_name()},
                 {"N", std::to_string(image.kind.N())},
                 {"n", std::to_string(image.n)},
                 {"ch", image.expansion.to_string()}});
  if (!image.expansion.empty()) {
    std::vector<std::pair<std::string, std::string>> rows{{"nu", "coeff"}};
    for (const auto& [nu, c] : image.expansion.terms()) rows.emplace_back(paren(nu), c.to_string());
    os << '\n' << aligned(rows);
  }
  return os.str();
}

std::string dimension_text(const DimensionReport& r) {
  std::string factors;
  for (const auto& f : r.factors) factors += (factors.empty() ? "" : " ") + f.to_string();
  return aligned({{"group", r.group.family_name()},
                  {"N", std::to_string(r.group.N())},
                  {"shape", paren(r.shape)},
                  {"factors", factors.empty() ? "-" : factors},
                  {"hook", r.hook.to_string()},
                  {"dim", r.value.to_string()}});
}

std::string polynomial_json(const Partition& nu, int n, const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", c.to_string()}});
  return dump({{"nu", to_json(nu)}, {"n", n}, {"terms", terms}});
}

}  // namespace

extern "C" {

const char* brauerch_version(void) { return "0.1.0"; }

const char* brauerch_last_error(void) { return last_error.c_str(); }

void brauerch_string_free(char* s) { std::free(s); }

brauerch_status brauerch_parse_family(const char* name, int* family) {
  return guarded([&] {
    require(name != nullptr && family != nullptr, "null argument");
    Family f;
    try {
      f = GroupKind::parse_family(name);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    *family = f == Family::general_linear ? BRAUERCH_GL : f == Family::orthogonal ? BRAUERCH_ORTHOGONAL : BRAUERCH_SYMPLECTIC;
  });
}

brauerch_status brauerch_chmap(const char* lambda, int family, int N, int method, int force_large,
                               brauerch_image** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const Partition p = parse_partition(lambda, "--lambda");
    const GroupKind kind = make_kind(family, N);
    require(method == BRAUERCH_CH_THEOREM || method == BRAUERCH_CH_ORACLE, "unknown ch method");
    ChImage image = method == BRAUERCH_CH_THEOREM ? ch_theorem(p, kind) : ch_oracle(p, kind, force_large != 0);
    *out = new brauerch_image{std::move(image)};
  });
}

size_t brauerch_image_term_count(const brauerch_image* image) {
  return image == nullptr ? 0 : image->value.expansion.terms().size();
}

brauerch_status brauerch_image_term(const brauerch_image* image, size_t index, char** nu, char** coeff) {
  return guarded([&] {
    require(image != nullptr && nu != nullptr && coeff != nullptr, "null argument");
    const auto& terms = image->value.expansion.terms();
    if (index >= terms.size()) throw DomainError("term index out of range");
    auto it = std::next(terms.begin(), static_cast<std::ptrdiff_t>(index));
    *nu = copy_string(it->first.to_string());
    try {
      *coeff = copy_string(it->second.to_string());
    } catch (...) {
      std::free(*nu);
      *nu = nullptr;
      throw;
    }
  });
}

brauerch_status brauerch_image_json(const brauerch_image* image, char** out) {
  return guarded([&] {
    require(image != nullptr && out != nullptr, "null argument");
    *out = copy_string(dump(to_json(image->value)));
  });
}

brauerch_status brauerch_image_text(const brauerch_image* image, char** out) {
  return guarded([&] {
    require(image != nullptr && out != nullptr, "null argument");
    *out = copy_string(image_text(image->value));
  });
}

void brauerch_image_free(brauerch_image* image) { delete image; }

brauerch_status brauerch_dimension(const char* shape, int family, int N, char** value) {
  return guarded([&] {
    require(value != nullptr, "null output pointer");
    *value = copy_string(dimension(parse_partition(shape, "--lambda"), make_kind(family, N)).value.to_string());
  });
}

brauerch_status brauerch_dimension_report(const char* shape, int family, int N, int as_json, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const DimensionReport r = dimension(parse_partition(shape, "--lambda"), make_kind(family, N));
    *out = copy_string(as_json ? dump(to_json(r)) : dimension_text(r));
  });
}

brauerch_status brauerch_tableau_count(const char* lambda, size_t* count) {
  return guarded([&] {
    require(count != nullptr, "null output pointer");
    *count = static_cast<size_t>(dim_skew(SkewShape(parse_partition(lambda, "--lambda"))));
  });
}

brauerch_status brauerch_tableau_text(const char* lambda, size_t index, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const auto tableaux = standard_tableaux(parse_partition(lambda, "--lambda"));
    if (index >= tableaux.size()) throw DomainError("tableau index out of range");
    *out = copy_string(tableaux[index].to_string());
  });
}

brauerch_status brauerch_idempotent(const char* lambda, size_t tableau_index, int family, int N, int force_large,
                                    brauerch_operator** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const Partition p = parse_partition(lambda, "--lambda");
    const GroupKind kind = make_kind(family, N);
    if (p.empty()) throw DomainError("the empty shape has no idempotent");
    check_shape_bound(p, kind);
    tensor_dimension(N, p.size(), force_large != 0);
    const auto tableaux = standard_tableaux(p);
    if (tableau_index >= tableaux.size())
      throw DomainError("tableau index " + std::to_string(tableau_index) + " out of range (shape has " +
                        std::to_string(tableaux.size()) + " standard tableaux)");
    *out = new brauerch_operator{primitive_idempotent(tableaux[tableau_index], kind, force_large != 0)};
  });
}

size_t brauerch_operator_dimension(const brauerch_operator* op) { return op == nullptr ? 0 : op->value.dimension(); }

size_t brauerch_operator_nnz(const brauerch_operator* op) { return op == nullptr ? 0 : op->value.matrix.nnz(); }

brauerch_status brauerch_operator_trace(const brauerch_operator* op, char** out) {
  return guarded([&] {
    require(op != nullptr && out != nullptr, "null argument");
    *out = copy_string(op->value.matrix.trace().to_string());
  });
}

brauerch_status brauerch_operator_json(const brauerch_operator* op, char** out) {
  return guarded([&] {
    require(op != nullptr && out != nullptr, "null argument");
    *out = copy_string(dump(to_json(op->value)));
  });
}

void brauerch_operator_free(brauerch_operator* op) { delete op; }

brauerch_status brauerch_schur(const char* nu, int n, int as_json, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    if (n < 1) throw DomainError("--n must be positive");
    const Partition p = parse_partition(nu, "--nu");
    const SymmetricPolynomial s = schur(p, n);
    *out = copy_string(as_json ? polynomial_json(p, n, s.poly) : s.poly.to_string("x") + "\n");
  });
}

brauerch_status brauerch_double_schur(const char* nu, int n, const char* eps, const char* at, const char* rho,
                                      int as_json, char** out) {
  return guarded([&] {
    require(out != nullptr && eps != nullptr, "null argument");
    if (n < 1) throw DomainError("--n must be positive");
    const Partition p = parse_partition(nu, "--nu");
    ParameterSequence a = ParameterSequence::zero();
    if (std::string(eps) != "zero") {
      Rational e;
      try {
        e = Rational::parse(eps);
      } catch (const Error& err) {
        throw UsageError(std::string("--eps: ") + err.what());
      }
      a = ParameterSequence::classical(e);
    }
    std::vector<Rational> point;
    if (at != nullptr) {
      point = parse_point(at);
    } else {
      require(rho != nullptr, "double-schur needs --at or --rho");
      point = a_rho(parse_partition(rho, "--rho"), n, a);
    }
    if (static_cast<int>(point.size()) != n)
      throw DomainError("evaluation point has " + std::to_string(point.size()) + " entries, expected n = " +
                        std::to_string(n));
    const Rational v = double_schur(p, n, a)(point);
    if (as_json) {
      Json pt = Json::array();
      for (const auto& x : point) pt.push_back(x.to_string());
      *out = copy_string(dump({{"nu", to_json(p)}, {"n", n}, {"eps", eps}, {"at", pt}, {"value", v.to_string()}}));
    } else {
      *out = copy_string(v.to_string() + "\n");
    }
  });
}

brauerch_status brauerch_basis(int m, int count_only, int as_json, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    if (m < 1) throw DomainError("--m must be at least 1");
    if (count_only) {
      if (m > 20) throw DomainError("--m above 20 overflows the basis count");
      const auto c = count_basis(m);
      *out = copy_string(as_json ? dump({{"m", m}, {"count", c}}) : std::to_string(c) + "\n");
      return;
    }
    if (m > 6) throw DomainError("listing is limited to m <= 6 (10395 diagrams); use --count");
    const auto all = all_diagrams(m);
    if (as_json) {
      Json list = Json::array();
      for (const auto& d : all) list.push_back(d.to_string());
      *out = copy_string(dump({{"m", m}, {"count", all.size()}, {"diagrams", list}}));
    } else {
      std::string s;
      for (const auto& d : all) s += d.to_string() + "\n";
      *out = copy_string(s);
    }
  });
}

brauerch_status brauerch_verify(const char* suite, int max_m, const int* N_values, size_t N_count, int as_json,
                                char** report, int* all_passed) {
  return guarded([&] {
    require(suite != nullptr && report != nullptr && all_passed != nullptr, "null argument");
    VerifyOptions options;
    options.max_m = max_m;
    if (N_values != nullptr) options.N_values.assign(N_values, N_values + N_count);
    for (int N : options.N_values)
      for (int m = 1; m <= max_m; ++m) tensor_dimension(N, m);
    const VerifyReport r = run_suite(suite, options);
    *report = copy_string(as_json ? r.json() : r.text());
    *all_passed = r.passed() ? 1 : 0;
  });
}

}  // extern "C"
