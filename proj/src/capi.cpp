// Copyright 2026 The subrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subrec/subrec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "subrec/bounds.hpp"
#include "subrec/error.hpp"
#include "subrec/fixedpoint.hpp"
#include "subrec/language.hpp"
#include "subrec/matrix.hpp"
#include "subrec/recognizability.hpp"
#include "subrec/report.hpp"
#include "subrec/seeds.hpp"

struct subrec_morphism {
  subrec::Morphism sigma;
};

namespace {

  thread_local std::string last_error;
  thread_local std::string last_kind;

  char* duplicate(std::string const& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
  }

  subrec_status fail(subrec_status status, std::string kind, std::string message) {
    last_kind  = std::move(kind);
    last_error = std::move(message);
    return status;
  }

  // Runs body, translating exceptions into status codes.
  template <class Body>
  subrec_status guarded(Body&& body) {
    try {
      last_error.clear();
      last_kind.clear();
      body();
      return SUBREC_OK;
    } catch (subrec::SyntaxError const& e) {
      return fail(SUBREC_INPUT_ERROR, to_string(e.kind()), e.what());
    } catch (subrec::Error const& e) {
      return fail(subrec::is_resource_error(e.kind()) ? SUBREC_RESOURCE_ERROR : SUBREC_INPUT_ERROR,
                  to_string(e.kind()), e.what());
    } catch (std::bad_alloc const&) {
      return fail(SUBREC_RESOURCE_ERROR, "OutOfMemory", "out of memory");
    } catch (std::exception const& e) {
      return fail(SUBREC_INTERNAL_ERROR, "Internal", e.what());
    }
  }

  subrec_status null_argument() {
    return fail(SUBREC_INPUT_ERROR, "InvalidArgument", "null argument");
  }

  subrec::Window first_window(subrec::Morphism const& sigma, std::size_t radius, unsigned min_depth) {
    auto const seeds = subrec::admissible_seeds(sigma);
    if (seeds.seeds.empty()) {
      throw subrec::Error(subrec::ErrorKind::no_seed, "no admissible seed with power <= "
                                                          + std::to_string(seeds.max_power));
    }
    return subrec::build_window(sigma, seeds.seeds.front(), radius, std::size_t(1) << 26, min_depth);
  }

}  // namespace

extern "C" {

const char* subrec_version(void) {
  return "0.1.0";
}

const char* subrec_last_error(void) {
  return last_error.c_str();
}

const char* subrec_last_error_kind(void) {
  return last_kind.c_str();
}

void subrec_analyze_options_init(subrec_analyze_options* options) {
  if (options != nullptr) {
    options->radius    = 1000;
    options->max_delay = 24;
    options->n_report  = 16;
    options->safe_d    = 0;
  }
}

subrec_status subrec_morphism_parse(const char* text, subrec_morphism** out) {
  if (text == nullptr || out == nullptr) {
    return null_argument();
  }
  *out = nullptr;
  return guarded([&] { *out = new subrec_morphism{subrec::parse_morphism(text)}; });
}

subrec_status subrec_morphism_load(const char* path, subrec_morphism** out) {
  if (path == nullptr || out == nullptr) {
    return null_argument();
  }
  *out = nullptr;
  return guarded([&] { *out = new subrec_morphism{subrec::load_morphism(path)}; });
}

void subrec_morphism_free(subrec_morphism* morphism) {
  delete morphism;
}

size_t subrec_morphism_size(const subrec_morphism* morphism) {
  return morphism == nullptr ? 0 : morphism->sigma.size();
}

subrec_status subrec_is_primitive(const subrec_morphism* morphism, int* primitive, unsigned* witness) {
  if (morphism == nullptr || primitive == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    auto const v = subrec::is_primitive(morphism->sigma);
    *primitive   = v.primitive ? 1 : 0;
    if (witness != nullptr) {
      *witness = v.witness;
    }
  });
}

subrec_status subrec_extreme_lengths(const subrec_morphism* morphism,
                                     unsigned long long     n,
                                     char**                 widest,
                                     char**                 narrowest) {
  if (morphism == nullptr || widest == nullptr || narrowest == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    auto const e = subrec::extreme_lengths(morphism->sigma, n);
    *widest      = duplicate(subrec::to_decimal(e.widest));
    *narrowest   = duplicate(subrec::to_decimal(e.narrowest));
  });
}

subrec_status subrec_analyze(const subrec_morphism*        morphism,
                             const subrec_analyze_options* options,
                             char**                        json) {
  if (morphism == nullptr || json == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    subrec::AnalyzeOptions o;
    if (options != nullptr) {
      o.radius    = options->radius;
      o.max_delay = options->max_delay;
      o.n_report  = options->n_report;
      o.safe_d    = options->safe_d != 0;
    }
    *json = duplicate(subrec::emit_report(subrec::analyze(morphism->sigma, o), true));
  });
}

subrec_status subrec_render_report(const char* json, int as_json, char** text) {
  if (json == nullptr || text == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    subrec::AnalysisReport report;
    try {
      report = subrec::Json::parse(json).get<subrec::AnalysisReport>();
    } catch (subrec::Json::exception const& e) {
      throw subrec::Error(subrec::ErrorKind::invalid_argument, std::string("bad report: ") + e.what());
    }
    *text = duplicate(subrec::emit_report(report, as_json != 0));
  });
}

subrec_status subrec_bound(const subrec_morphism* morphism, int certified, int safe_d, char** json) {
  if (morphism == nullptr || json == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    subrec::BoundOptions o;
    o.mode   = certified != 0 ? subrec::BoundMode::certified : subrec::BoundMode::empirical_exact;
    o.safe_d = safe_d != 0;
    subrec::Json out{{"maindetail", subrec::bound_json(subrec::bound_maindetail(morphism->sigma, o))},
                     {"closed_form", subrec::closed_form_json(subrec::bound_closed_form(morphism->sigma))}};
    *json = duplicate(out.dump(2) + "\n");
  });
}

subrec_status subrec_delay(const subrec_morphism* morphism, size_t n_max, char** json) {
  if (morphism == nullptr || json == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    auto const r = subrec::synchronizing_delay(morphism->sigma, n_max);
    *json        = duplicate(subrec::delay_json(morphism->sigma, r).dump(2) + "\n");
  });
}

subrec_status subrec_verify(const subrec_morphism* morphism,
                            size_t                 L,
                            unsigned               level,
                            size_t                 radius,
                            char**                 json) {
  if (morphism == nullptr || json == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    auto const window  = first_window(morphism->sigma, radius, level);
    auto const verdict = subrec::verify_constant(window, L, level);
    *json = duplicate(subrec::verify_json(window, L, level, verdict).dump(2) + "\n");
  });
}

subrec_status subrec_language(const subrec_morphism* morphism, size_t n, char** json) {
  if (morphism == nullptr || json == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    auto const f = subrec::factor_language(morphism->sigma, n);
    *json        = duplicate(subrec::language_json(morphism->sigma, f).dump(2) + "\n");
  });
}

subrec_status subrec_seeds(const subrec_morphism* morphism, unsigned max_power, char** json) {
  if (morphism == nullptr || json == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    auto const s = subrec::admissible_seeds(morphism->sigma, max_power);
    *json        = duplicate(subrec::seeds_json(morphism->sigma, s).dump(2) + "\n");
  });
}

subrec_status subrec_window_dump(const subrec_morphism* morphism,
                                 size_t                 radius,
                                 unsigned               max_level,
                                 char**                 text) {
  if (morphism == nullptr || text == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    auto const window = first_window(morphism->sigma, radius, max_level);
    *text             = duplicate(subrec::dump_window(window, max_level));
  });
}

void subrec_string_free(char* text) {
  std::free(text);
}

}  // extern "C"
