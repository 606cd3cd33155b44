#include "loopclass.h"

#include "int_matrix.hpp"
#include "query.hpp"
#include "serialize.hpp"

#include <cstring>
#include <new>
#include <string>

struct lc_result {
  std::string data;
};

namespace {

thread_local std::string g_lastError;

const char* safeString(const char* s) { return s ? s : ""; }

template <typename Fn>
lc_status run(lc_result** result, const char* format, Fn&& fn) {
  if (result == nullptr) {
    g_lastError = "result pointer is null";
    return LC_EINVAL;
  }
  *result = nullptr;
  try {
    loopclass::OutTable table = fn();
    std::string fmt = safeString(format);
    if (fmt.empty()) fmt = "tsv";
    *result = new lc_result{loopclass::render(table, fmt)};
    return LC_OK;
  } catch (const loopclass::internal_error& e) {
    g_lastError = e.what();
    return LC_EINTERNAL;
  } catch (const std::invalid_argument& e) {
    g_lastError = e.what();
    return LC_EINVAL;
  } catch (const std::bad_alloc&) {
    g_lastError = "out of memory";
    return LC_EINTERNAL;
  } catch (const std::exception& e) {
    g_lastError = e.what();
    return LC_EINTERNAL;
  }
}

}  // namespace

extern "C" {

const char* lc_result_data(const lc_result* result) {
  return result ? result->data.c_str() : "";
}

size_t lc_result_size(const lc_result* result) {
  return result ? result->data.size() : 0;
}

void lc_result_free(lc_result* result) { delete result; }

const char* lc_last_error(void) { return g_lastError.c_str(); }

lc_status lc_classify(const char* type, int nullity, const char* over,
                      const char* format, lc_result** result) {
  return run(result, format, [&] {
    return loopclass::queries::classify(safeString(type), nullity,
                                        safeString(over));
  });
}

lc_status lc_table_eala2(const char* types_csv, const char* format,
                         lc_result** result) {
  return run(result, format, [&] {
    return loopclass::queries::table_eala2(safeString(types_csv));
  });
}

lc_status lc_cohomology(const char* divisors_csv, int nvars,
                        const char* sigmas, int degree, const char* format,
                        lc_result** result) {
  return run(result, format, [&] {
    return loopclass::queries::cohomology(safeString(divisors_csv), nvars,
                                          safeString(sigmas), degree);
  });
}

lc_status lc_quadforms(int dim, int nvars, int count_only, const char* format,
                       lc_result** result) {
  return run(result, format, [&] {
    return loopclass::queries::quadforms(dim, nvars, count_only != 0);
  });
}

lc_status lc_g2(int nvars, int quotient, const char* format,
                lc_result** result) {
  return run(result, format,
             [&] { return loopclass::queries::g2(nvars, quotient != 0); });
}

lc_status lc_exceptional3(const char* type, int quotient, const char* format,
                          lc_result** result) {
  return run(result, format, [&] {
    return loopclass::queries::exceptional3(safeString(type), quotient != 0);
  });
}

lc_status lc_azumaya_generators(const char* chain_csv, long long degree,
                                const char* format, lc_result** result) {
  return run(result, format, [&] {
    return loopclass::queries::azumaya_generators(safeString(chain_csv),
                                                  degree);
  });
}

lc_status lc_azumaya_irreducible(const char* chain_csv, long long degree,
                                 const char* format, lc_result** result) {
  return run(result, format, [&] {
    return loopclass::queries::azumaya_irreducible(safeString(chain_csv),
                                                   degree);
  });
}

lc_status lc_azumaya_real_table(long long degree, const char* format,
                                lc_result** result) {
  return run(result, format, [&] {
    return loopclass::queries::azumaya_real_table(degree);
  });
}

lc_status lc_azumaya_oracle(const char* tuple, const char* format,
                            lc_result** result) {
  return run(result, format, [&] {
    return loopclass::queries::azumaya_oracle(safeString(tuple));
  });
}

lc_status lc_normal_form_brussel(const char* chain_csv, const char* tuple,
                                 const char* format, lc_result** result) {
  return run(result, format, [&] {
    return loopclass::queries::normal_form_brussel(safeString(chain_csv),
                                                   safeString(tuple));
  });
}

lc_status lc_verify(const char* format, lc_result** result) {
  return run(result, format, [] { return loopclass::queries::verify(); });
}

}  // extern "C"
