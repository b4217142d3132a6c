#include "skewlr_c.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "skewlr/hasse.hpp"
#include "skewlr/schur.hpp"
#include "skewlr/skew_shape.hpp"
#include "skewlr/staircase.hpp"

struct skewlr_shape {
  skewlr::SkewShape value;
};

struct skewlr_expansion {
  skewlr::SchurExpansion value;
  std::vector<std::pair<skewlr::Partition, long long>> flat;
};

namespace {

thread_local std::string g_last_error;

template <class Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return SKEWLR_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return SKEWLR_EINVAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SKEWLR_ECOMPUTE;
  }
}

std::vector<int> to_vector(const int* data, size_t len) {
  if (len > 0 && data == nullptr)
    throw std::invalid_argument("null array with nonzero length");
  return std::vector<int>(data, data + len);
}

skewlr::ComputeOptions to_options(const skewlr_options* opt) {
  skewlr::ComputeOptions out;
  if (opt != nullptr) {
    out.node_limit = opt->node_limit;
    out.workers = opt->workers;
  }
  return out;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const skewlr::SkewShape& deref(const skewlr_shape* shape) {
  if (shape == nullptr) throw std::invalid_argument("null shape");
  return shape->value;
}

const skewlr_expansion& deref(const skewlr_expansion* e) {
  if (e == nullptr) throw std::invalid_argument("null expansion");
  return *e;
}

template <class T>
T& out_ref(T* out) {
  if (out == nullptr) throw std::invalid_argument("null output argument");
  return *out;
}

skewlr_expansion* wrap_expansion(skewlr::SchurExpansion e) {
  auto* out = new skewlr_expansion{std::move(e), {}};
  out->flat.assign(out->value.terms.begin(), out->value.terms.end());
  return out;
}

std::vector<std::pair<std::string, skewlr::SkewShape>> hook_family(
    const std::vector<int>& alpha, int h, int k, int complement_rect_height) {
  if (h < 1) throw std::invalid_argument("need h >= 1");
  std::vector<std::pair<std::string, skewlr::SkewShape>> out;
  for (skewlr::Hook hk : skewlr::hooks_of_size(h)) {
    skewlr::SkewShape shape =
        skewlr::family_member(hk, alpha, k, complement_rect_height > 0,
                              complement_rect_height);
    out.emplace_back(skewlr::format_parts(hk.to_partition()), shape);
  }
  return out;
}

}  // namespace

extern "C" {

const char* skewlr_last_error(void) { return g_last_error.c_str(); }

void skewlr_string_free(char* s) { std::free(s); }

int skewlr_shape_parse(const char* text, skewlr_shape** out) {
  return guarded([&] {
    if (text == nullptr) throw std::invalid_argument("null text");
    auto shape = skewlr::parse_skew(text);
    out_ref(out) = new skewlr_shape{std::move(shape)};
  });
}

int skewlr_shape_from_parts(const int* outer, size_t outer_len,
                            const int* inner, size_t inner_len,
                            skewlr_shape** out) {
  return guarded([&] {
    skewlr::SkewShape shape(to_vector(outer, outer_len),
                            to_vector(inner, inner_len));
    out_ref(out) = new skewlr_shape{std::move(shape)};
  });
}

int skewlr_staircase_shape(const int* lambda, size_t lambda_len,
                           const int* alpha, size_t alpha_len, int k,
                           skewlr_shape** out) {
  return guarded([&] {
    skewlr::SkewShape shape = skewlr::staircase_with_foundation(
        to_vector(lambda, lambda_len), to_vector(alpha, alpha_len), k);
    out_ref(out) = new skewlr_shape{std::move(shape)};
  });
}

void skewlr_shape_free(skewlr_shape* shape) { delete shape; }

int skewlr_shape_format(const skewlr_shape* shape, char** out) {
  return guarded([&] {
    out_ref(out) = dup_string(skewlr::format_skew(deref(shape)));
  });
}

int skewlr_shape_box_count(const skewlr_shape* shape, int* out) {
  return guarded([&] { out_ref(out) = deref(shape).box_count(); });
}

int skewlr_complement(const int* rho, size_t rho_len, int width, int height,
                      char** out) {
  return guarded([&] {
    skewlr::Partition result = skewlr::complement(
        to_vector(rho, rho_len), skewlr::Rectangle{width, height});
    out_ref(out) = dup_string(skewlr::format_parts(result));
  });
}

int skewlr_expand(const skewlr_shape* shape, const skewlr_options* opt,
                  skewlr_expansion** out) {
  return guarded([&] {
    out_ref(out) = wrap_expansion(
        skewlr::skew_schur_expansion(deref(shape), to_options(opt)));
  });
}

void skewlr_expansion_free(skewlr_expansion* e) { delete e; }

int skewlr_expansion_format(const skewlr_expansion* e, int as_json,
                            char** out) {
  return guarded([&] {
    const skewlr::SchurExpansion& value = deref(e).value;
    out_ref(out) = dup_string(as_json ? skewlr::expansion_json(value)
                                      : skewlr::expansion_text(value));
  });
}

int skewlr_expansion_term_count(const skewlr_expansion* e, size_t* out) {
  return guarded([&] { out_ref(out) = deref(e).flat.size(); });
}

int skewlr_expansion_term(const skewlr_expansion* e, size_t index,
                          const int** parts, size_t* parts_len,
                          long long* coeff) {
  return guarded([&] {
    const skewlr_expansion& wrapper = deref(e);
    if (index >= wrapper.flat.size())
      throw std::invalid_argument("term index out of range");
    const auto& [p, c] = wrapper.flat[index];
    out_ref(parts) = p.data();
    out_ref(parts_len) = p.size();
    out_ref(coeff) = c;
  });
}

int skewlr_lr_coefficient(const int* outer, size_t outer_len, const int* inner,
                          size_t inner_len, const int* nu, size_t nu_len,
                          const skewlr_options* opt, long long* out) {
  return guarded([&] {
    skewlr::ComputeOptions copt = to_options(opt);
    out_ref(out) = skewlr::lr_coefficient(
        to_vector(outer, outer_len), to_vector(inner, inner_len),
        to_vector(nu, nu_len), skewlr::EnumOptions{copt.node_limit, copt.workers});
  });
}

int skewlr_compare(const skewlr_shape* first, const skewlr_shape* second,
                   const skewlr_options* opt, int* verdict,
                   char** first_witness, char** second_witness) {
  return guarded([&] {
    skewlr::ComparisonResult result =
        skewlr::compare(deref(first), deref(second), to_options(opt));
    int code = SKEWLR_CMP_INCOMPARABLE;
    switch (result.verdict) {
      case skewlr::ComparisonResult::Verdict::FirstDominates:
        code = SKEWLR_CMP_FIRST_DOMINATES;
        break;
      case skewlr::ComparisonResult::Verdict::SecondDominates:
        code = SKEWLR_CMP_SECOND_DOMINATES;
        break;
      case skewlr::ComparisonResult::Verdict::Equal:
        code = SKEWLR_CMP_EQUAL;
        break;
      case skewlr::ComparisonResult::Verdict::Incomparable:
        code = SKEWLR_CMP_INCOMPARABLE;
        break;
    }
    auto witness_string =
        [](const std::optional<std::pair<skewlr::Partition, long long>>& w)
        -> char* {
      if (!w) return nullptr;
      return dup_string(skewlr::format_parts(w->first) + ":" +
                        std::to_string(w->second));
    };
    out_ref(verdict) = code;
    if (first_witness != nullptr)
      *first_witness = witness_string(result.first_witness);
    if (second_witness != nullptr)
      *second_witness = witness_string(result.second_witness);
  });
}

int skewlr_hasse_dot(const int* alpha, size_t alpha_len, int h, int k,
                     int complement_rect_height, const skewlr_options* opt,
                     char** out) {
  return guarded([&] {
    skewlr::HasseGraph g =
        skewlr::build_order(hook_family(to_vector(alpha, alpha_len), h, k,
                                        complement_rect_height),
                            to_options(opt));
    out_ref(out) = dup_string(skewlr::emit_dot(g));
  });
}

int skewlr_hasse_json(const int* alpha, size_t alpha_len, int h, int k,
                      int complement_rect_height, const skewlr_options* opt,
                      char** out) {
  return guarded([&] {
    skewlr::HasseGraph g =
        skewlr::build_order(hook_family(to_vector(alpha, alpha_len), h, k,
                                        complement_rect_height),
                            to_options(opt));
    out_ref(out) = dup_string(skewlr::hasse_json(g));
  });
}

int skewlr_verify_family(const int* alpha, size_t alpha_len, int h, int k,
                         int complemented, int rect_height,
                         const skewlr_options* opt, char** report_json_out,
                         int* mismatch_count) {
  return guarded([&] {
    skewlr::FamilyReport report =
        skewlr::verify_hook_family(to_vector(alpha, alpha_len), h, k,
                                   complemented != 0, rect_height,
                                   to_options(opt));
    if (report_json_out != nullptr)
      *report_json_out = dup_string(skewlr::report_json(report));
    if (mismatch_count != nullptr) *mismatch_count = report.mismatch_count;
  });
}

}  // extern "C"
