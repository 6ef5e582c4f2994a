#include "treechild/treechild.h"

#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "core/errors.hpp"
#include "core/laws.hpp"
#include "core/numbers.hpp"
#include "core/paths.hpp"
#include "core/series.hpp"
#include "core/tableaux.hpp"
#include "core/words.hpp"

using namespace treechild;
using json = nlohmann::ordered_json;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
tc_status guarded(Fn&& fn) {
  try {
    fn();
    return TC_OK;
  } catch (const InvalidInputError& e) {
    g_last_error = e.what();
    return TC_ERR_INVALID_ARGUMENT;
  } catch (const BudgetError& e) {
    g_last_error = e.what();
    return TC_ERR_BUDGET_EXCEEDED;
  } catch (const InconsistencyError& e) {
    g_last_error = e.what();
    return TC_ERR_INCONSISTENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TC_ERR_INTERNAL;
  }
}

words::WordClassSpec spec_from(char cls, int n, int k) {
  return words::WordClassSpec::make(words::class_from_tag(cls), n, k);
}

words::EnumerateOptions enum_options(int max_total_length, int h_all_letters) {
  words::EnumerateOptions opts;
  if (max_total_length > 0) opts.max_total_length = max_total_length;
  opts.h_requires_all_letters = h_all_letters != 0;
  return opts;
}

}  // namespace

extern "C" {

const char* tc_status_name(tc_status status) {
  switch (status) {
    case TC_OK: return "ok";
    case TC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TC_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case TC_ERR_INCONSISTENT: return "internal consistency failure";
    case TC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* tc_last_error_message(void) { return g_last_error.c_str(); }

const char* tc_version(void) { return "0.1.0"; }

void tc_string_free(char* s) { ::free(s); }

void tc_string_array_free(char** strings, size_t count) {
  if (!strings) return;
  for (size_t i = 0; i < count; ++i) ::free(strings[i]);
  ::free(strings);
}

tc_status tc_words_count(char cls, int n, int k, int max_total_length,
                         int h_all_letters, char** out_count) {
  return guarded([&] {
    const Int c = words::count(spec_from(cls, n, k),
                               enum_options(max_total_length, h_all_letters));
    *out_count = dup_string(to_string(c));
  });
}

tc_status tc_words_list(char cls, int n, int k, int max_total_length,
                        int h_all_letters, char*** out_words,
                        size_t* out_count) {
  return guarded([&] {
    const auto spec = spec_from(cls, n, k);
    const auto list =
        words::enumerate(spec, enum_options(max_total_length, h_all_letters));
    char** arr = static_cast<char**>(::malloc(sizeof(char*) * std::max<size_t>(list.size(), 1)));
    for (size_t i = 0; i < list.size(); ++i)
      arr[i] = dup_string(words::to_string(list[i], spec.n));
    *out_words = arr;
    *out_count = list.size();
  });
}

tc_status tc_word_is_valid(const char* word, char cls, int n, int k,
                           int h_all_letters, int* out_valid) {
  return guarded([&] {
    const auto spec = spec_from(cls, n, k);
    const auto w = words::word_from_string(word, spec.n);
    words::EnumerateOptions opts;
    opts.h_requires_all_letters = h_all_letters != 0;
    *out_valid = words::is_valid(w, spec, opts) ? 1 : 0;
  });
}

tc_status tc_word_to_tableau(const char* word, char cls, int n, int k,
                             char** out_json) {
  return guarded([&] {
    const auto spec = spec_from(cls, n, k);
    const auto w = words::word_from_string(word, spec.n);
    *out_json = dup_string(tableaux::word_to_tableau(w, spec).to_json());
  });
}

tc_status tc_tableau_to_word(const char* tableau_json, char cls, int n, int k,
                             char** out_word) {
  return guarded([&] {
    const auto spec = spec_from(cls, n, k);
    const auto tab = tableaux::Tableau::from_json(tableau_json);
    *out_word = dup_string(words::to_string(tableaux::tableau_to_word(tab, spec), spec.n));
  });
}

tc_status tc_y_count(long k, long l1, long l2, char** out_count) {
  return guarded([&] {
    if (k < 0 || l1 < 0 || l2 < 0)
      throw InvalidInputError("y_count needs nonnegative indices");
    if (k > 2000 || l1 > 2000 || l2 > 2000)
      throw BudgetError("y_count indices beyond the direct-table budget (2000)");
    *out_count = dup_string(to_string(
        tableaux::y_count(static_cast<int>(k), static_cast<int>(l1),
                          static_cast<int>(l2))));
  });
}

tc_status tc_network_count(long n, long k, char** out_count) {
  return guarded([&] {
    *out_count = dup_string(to_string(tableaux::tc_count(n, k)));
  });
}

tc_status tc_b_count(long n, long k, char** out_count) {
  return guarded([&] {
    *out_count = dup_string(to_string(paths::b_path_count(n, k)));
  });
}

tc_status tc_c_count(long n, long k, char** out_count) {
  return guarded([&] {
    *out_count = dup_string(to_string(paths::c_path_count(n, k)));
  });
}

tc_status tc_b_count_dyck(long n, long k, char** out_count) {
  return guarded([&] {
    *out_count = dup_string(to_string(paths::b_dyck_count(n, k)));
  });
}

struct tc_report {
  bool passed = false;
  std::vector<std::string> lines;
};

tc_status tc_verify_tableau_identity(long max_n, tc_report** out_report) {
  return guarded([&] {
    if (max_n < 0 || max_n > 5000)
      throw InvalidInputError("verify tableau identity: max_n out of range");
    const auto rep = tableaux::verify_tableau_identity(static_cast<int>(max_n));
    auto* out = new tc_report;
    out->passed = rep.passed;
    out->lines.push_back(rep.summary());
    *out_report = out;
  });
}

tc_status tc_verify_series_identity(long max_k, long order, int jobs,
                                    tc_report** out_report) {
  return guarded([&] {
    if (max_k < 0 || max_k > 500)
      throw InvalidInputError("verify series identity: max_k out of range");
    const auto results = series::verify_gf_identity_upto(
        static_cast<int>(max_k), order, jobs > 0 ? jobs : 1);
    auto* out = new tc_report;
    out->passed = true;
    for (const auto& r : results) {
      std::string line = "k=" + std::to_string(r.k) + " order=" +
                         std::to_string(r.order) +
                         (r.passed ? " pass" : " FAIL at z^" +
                                                   std::to_string(r.first_mismatch));
      out->passed = out->passed && r.passed;
      out->lines.push_back(std::move(line));
    }
    *out_report = out;
  });
}

int tc_report_passed(const tc_report* report) { return report->passed ? 1 : 0; }

size_t tc_report_line_count(const tc_report* report) {
  return report->lines.size();
}

const char* tc_report_line(const tc_report* report, size_t i) {
  if (i >= report->lines.size()) return nullptr;
  return report->lines[i].c_str();
}

void tc_report_free(tc_report* report) { delete report; }

struct tc_series {
  QSeries data{0};
};

tc_status tc_series_compute(char which, long k, long order,
                            tc_series** out_series) {
  return guarded([&] {
    if (order < 1 || order > 100000)
      throw InvalidInputError("series order out of range");
    QSeries s{0};
    switch (which) {
      case 'D': case 'd': s = series::dyck_series(order); break;
      case 'E': case 'e': s = series::e_series(order); break;
      case 'B': case 'b':
        if (k < 0 || k > 500) throw InvalidInputError("series B: k out of range");
        s = series::b_k_series(static_cast<int>(k), order);
        break;
      case 'C': case 'c':
        if (k < 0 || k > 500) throw InvalidInputError("series C: k out of range");
        s = series::c_k_series(static_cast<int>(k), order);
        break;
      default:
        throw InvalidInputError("series selector must be D, E, B or C");
    }
    *out_series = new tc_series{std::move(s)};
  });
}

long tc_series_order(const tc_series* series) { return series->data.order(); }

tc_status tc_series_coeff(const tc_series* series, long i, char** out_fraction) {
  return guarded([&] {
    *out_fraction = dup_string(to_string(series->data.coeff(i)));
  });
}

void tc_series_free(tc_series* series) { delete series; }

struct tc_dist {
  laws::DistTable table;
};

tc_status tc_dist_compute(char param, long n, tc_dist** out_dist) {
  return guarded([&] {
    laws::DistTable t;
    switch (param) {
      case 'X': case 'x': t = laws::dist_X(n); break;
      case 'Y': case 'y': t = laws::dist_Y(n); break;
      case 'Z': case 'z': t = laws::dist_Z(n); break;
      default: throw InvalidInputError("distribution parameter must be X, Y or Z");
    }
    *out_dist = new tc_dist{std::move(t)};
  });
}

long tc_dist_support_min(const tc_dist* dist) { return dist->table.support_min; }

long tc_dist_support_max(const tc_dist* dist) {
  return dist->table.support_max();
}

tc_status tc_dist_mass(const tc_dist* dist, long m, char** out_fraction) {
  return guarded([&] {
    *out_fraction = dup_string(to_string(dist->table.mass(m)));
  });
}

tc_status tc_dist_mass_double(const tc_dist* dist, long m, double* out_value) {
  return guarded([&] { *out_value = to_double(dist->table.mass(m)); });
}

tc_status tc_dist_moment(const tc_dist* dist, int r, char** out_fraction) {
  return guarded([&] {
    if (r < 0) throw InvalidInputError("moment order must be nonnegative");
    *out_fraction = dup_string(to_string(dist->table.moment(r)));
  });
}

void tc_dist_free(tc_dist* dist) { delete dist; }

tc_status tc_convergence_report(char param, const long* n_list, size_t n_count,
                                int r_max, char** out_json) {
  return guarded([&] {
    std::vector<long> ns(n_list, n_list + n_count);
    const auto rep = laws::convergence_report(param, ns, r_max);
    json doc;
    doc["param"] = std::string(1, rep.param);
    doc["r_max"] = rep.r_max;
    doc["n_list"] = rep.n_list;
    json rows = json::array();
    for (const auto& row : rep.rows) {
      json r;
      r["n"] = row.n;
      r["r"] = row.r;
      r["moment"] = to_double(row.scaled_moment);
      r["target"] = to_double(row.target);
      r["gap"] = to_double(row.gap);
      r["moment_exact"] = to_string(row.scaled_moment);
      rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    json doubling = json::array();
    for (const auto& d : rep.doubling) {
      json r;
      r["r"] = d.r;
      r["n_small"] = d.n_small;
      r["n_big"] = d.n_big;
      r["gap_small"] = to_double(d.gap_small);
      r["gap_big"] = to_double(d.gap_big);
      r["shrank"] = d.shrank;
      doubling.push_back(std::move(r));
    }
    doc["doubling"] = std::move(doubling);
    doc["doubling_all_ok"] = rep.doubling_all_ok;
    if (rep.mean_ratio) {
      doc["mean_ratio"] = *rep.mean_ratio;
      doc["mean_ratio_target"] = *rep.mean_ratio_target;
    }
    if (rep.spread_ratio) {
      doc["spread_ratio"] = *rep.spread_ratio;
      doc["spread_ratio_target"] = *rep.spread_ratio_target;
    }
    *out_json = dup_string(doc.dump());
  });
}

}  // extern "C"
