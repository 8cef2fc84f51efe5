#include "cthh/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "cthh/algebra.hpp"
#include "cthh/error.hpp"
#include "cthh/io.hpp"
#include "cthh/relations.hpp"

namespace cthh {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string dims_text(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

std::size_t worker_count() {
  if (const char* env = std::getenv("CT_HH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = worker_count();
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<ClassMember> sample_class(std::vector<ClassMember> members, std::size_t k) {
  if (k >= members.size()) return members;
  std::stable_sort(members.begin(), members.end(), [](const ClassMember& a, const ClassMember& b) {
    const auto ha = fnv1a(a.canonical), hb = fnv1a(b.canonical);
    return ha != hb ? ha < hb : a.canonical < b.canonical;
  });
  members.resize(k);
  std::sort(members.begin(), members.end(),
            [](const ClassMember& a, const ClassMember& b) { return a.canonical < b.canonical; });
  return members;
}

VerifyRecord verify_quiver(const Quiver& q, const DynkinType& type, const std::vector<FieldSpec>& fields,
                           std::size_t max_i, const OracleOptions& oracle) {
  VerifyRecord r;
  r.quiver = q;
  r.canonical = canonical_hex(canonical_form(q));
  auto fail = [&](std::string what) { r.failures.push_back(std::move(what)); };
  try {
    const auto relations = generate_relations(q);
    r.zero_relations = relations.zero_relations();
    r.commutativity_relations = relations.commutativity_relations();
    const auto algebra = build_algebra(q, relations);
    r.dimension = algebra.dimension();
    const auto c = cartan(algebra);
    r.cartan_det = c.det;
    r.assoc_poly = c.assoc_poly;
    r.hh1 = hh1_dim(algebra, algebra.field());
    try {
      r.universal = hh_universal(r.hh1, c.det);
    } catch (const Error& e) {
      fail(std::string("determinant route: ") + e.what());
    }
    try {
      const auto closed = hh_closed_form(q, type);
      r.closed_form = closed.h;
      r.method = closed.method;
      r.d_params = closed.d_params;
    } catch (const Error& e) {
      fail(std::string("closed form: ") + e.what());
    }
    if (r.closed_form && r.universal && *r.closed_form != *r.universal) {
      fail("closed form " + format_h(*r.closed_form) + " differs from determinant route " + format_h(*r.universal));
    }
    for (const auto& field : fields) {
      FieldDims fd;
      fd.field = field;
      const auto a = field == algebra.field() ? algebra : build_algebra(q, relations, field);
      fd.oracle = hh_dims(a, field, max_i, oracle).dims;
      if (r.closed_form) fd.expected = hh_dims_from_series(*r.closed_form, max_i, field);
      if (r.universal && hh_dims_from_series(*r.universal, max_i, field) != fd.oracle) {
        fail("oracle " + dims_text(fd.oracle) + " over " + field.name() + " differs from determinant route");
      }
      if (r.closed_form && fd.expected != fd.oracle) {
        fail("oracle " + dims_text(fd.oracle) + " over " + field.name() + " differs from closed form " +
             dims_text(fd.expected));
      }
      if (fd.oracle.size() > 2 && fd.oracle[2] != 0) fail("HH^2 != 0 over " + field.name());
      r.dims.push_back(std::move(fd));
    }
  } catch (const Error& e) {
    fail(e.what());
  }
  return r;
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass(); }));
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << to_string(type) << ": " << records.size() << " of " << class_size << " quivers checked, "
     << records.size() - failures() << " passed, " << failures() << " failed; " << (pass() ? "PASS" : "FAIL");
  return os.str();
}

VerifyReport verify_suite(const VerifyOptions& options) {
  VerifyReport report;
  report.type = options.type;
  report.fields = options.fields;
  report.max_i = options.max_i;
  auto members = enumerate_class(standard_seed(options.type), options.class_cap);
  report.class_size = members.size();
  if (options.sample) members = sample_class(std::move(members), *options.sample);
  report.records.resize(members.size());
  parallel_for(members.size(), options.threads, [&](std::size_t i) {
    report.records[i] = verify_quiver(members[i].quiver, options.type, options.fields, options.max_i, options.oracle);
  });
  return report;
}

nlohmann::json to_json(const VerifyRecord& r) {
  nlohmann::json dims = nlohmann::json::object();
  for (const auto& fd : r.dims) dims[fd.field.name()] = {{"oracle", fd.oracle}, {"expected", fd.expected}};
  nlohmann::json out{{"canonical", r.canonical},
                     {"quiver", quiver_to_json(r.quiver)},
                     {"relations", {{"zero", r.zero_relations}, {"commutativity", r.commutativity_relations}}},
                     {"dimension", r.dimension},
                     {"cartan_det", to_decimal(r.cartan_det)},
                     {"assoc_poly", to_json(r.assoc_poly)},
                     {"hh1", r.hh1},
                     {"h", r.closed_form ? nlohmann::json(format_h(*r.closed_form)) : nlohmann::json()},
                     {"method", r.method},
                     {"h_universal", r.universal ? nlohmann::json(format_h(*r.universal)) : nlohmann::json()},
                     {"dims", dims},
                     {"pass", r.pass()},
                     {"failures", r.failures}};
  if (r.d_params) out["d_params"] = to_json(*r.d_params);
  return out;
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json fields = nlohmann::json::array();
  for (const auto& f : r.fields) fields.push_back(f.name());
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  return {{"type", to_string(r.type)}, {"class_size", r.class_size}, {"fields", fields}, {"max_i", r.max_i},
          {"records", records}, {"failures", r.failures()}, {"pass", r.pass()}, {"summary", r.summary()}};
}

}  // namespace cthh
