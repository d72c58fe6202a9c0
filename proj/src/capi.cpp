#include "gosset.h"

#include <fstream>
#include <new>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gosset/class_catalog.hpp"
#include "gosset/errors.hpp"
#include "gosset/gosset_polytope.hpp"
#include "gosset/inscribed.hpp"
#include "gosset/steiner.hpp"
#include "gosset/verify.hpp"

struct gosset_catalog {
  gosset::ClassCatalog cat;
};

struct gosset_string {
  std::string text;
};

namespace {

using json = nlohmann::json;
using namespace gosset;

thread_local std::string g_error;

struct Aborted {};

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Fn>
gosset_status guard(Fn&& fn) {
  g_error.clear();
  try {
    fn();
    return GOSSET_OK;
  } catch (const Aborted&) {
    g_error = "stopped by callback";
    return GOSSET_ERR_ABORTED;
  } catch (const ArgumentError& e) {
    g_error = e.what();
    return GOSSET_ERR_ARGUMENT;
  } catch (const DomainError& e) {
    g_error = e.what();
    return GOSSET_ERR_DOMAIN;
  } catch (const InvariantError& e) {
    g_error = e.what();
    return GOSSET_ERR_INVARIANT;
  } catch (const IoError& e) {
    g_error = e.what();
    return GOSSET_ERR_IO;
  } catch (const ParseError& e) {
    g_error = e.what();
    return GOSSET_ERR_PARSE;
  } catch (const json::exception& e) {
    g_error = e.what();
    return GOSSET_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return GOSSET_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return GOSSET_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown failure";
    return GOSSET_ERR_INTERNAL;
  }
}

template <class T>
T& need(T* p, const char* what) {
  if (!p) throw ArgumentError(std::string(what) + " is null");
  return *p;
}

const char* need_str(const char* s, const char* what) {
  if (!s) throw ArgumentError(std::string(what) + " is null");
  return s;
}

void emit(gosset_string** out, std::string text) {
  need(out, "output");
  *out = new gosset_string{std::move(text)};
}

json class_json(const DivisorClass& d) { return d; }

json simplex_json(const ClassCatalog& lines, const InscribedSimplex& s, bool classify_it) {
  json j{{"vertices", s.vertices}, {"degree", s.degree}, {"center", class_json(s.center)}};
  if (classify_it) {
    const auto tag = classify(lines, s);
    j["tag"] = tag.cornered ? "cornered" : "uncornered";
    if (tag.cornered) j["corner_line"] = tag.corner_lines.front();
    if (tag.companion) j["companion"] = class_json(*tag.companion);
  }
  return j;
}

InscribedSimplex sample_a3(const ClassCatalog& lines, bool cornered, std::mt19937_64& rng) {
  for (int i = 0; i < 100000; ++i) {
    auto s = sample_inscribed(lines, 3, 1, rng);
    if (is_cornered(lines, s.vertices) == cornered) return s;
  }
  throw InvariantError("sampler found no A_3 of the requested kind");
}


}  // namespace

extern "C" {

const char* gosset_version(void) { return "1.0.0"; }

const char* gosset_last_error(void) { return g_error.c_str(); }

const char* gosset_status_name(gosset_status status) {
  switch (status) {
    case GOSSET_OK: return "ok";
    case GOSSET_ERR_ARGUMENT: return "argument";
    case GOSSET_ERR_DOMAIN: return "domain";
    case GOSSET_ERR_INVARIANT: return "invariant";
    case GOSSET_ERR_IO: return "io";
    case GOSSET_ERR_PARSE: return "parse";
    case GOSSET_ERR_INTERNAL: return "internal";
    case GOSSET_ERR_ABORTED: return "aborted";
  }
  return "unknown";
}

const char* gosset_string_data(const gosset_string* s) { return s ? s->text.c_str() : ""; }
size_t gosset_string_size(const gosset_string* s) { return s ? s->text.size() : 0; }
void gosset_string_free(gosset_string* s) { delete s; }

gosset_status gosset_catalog_build(const char* kind, int r, gosset_catalog** out) {
  return guard([&] {
    need(out, "output");
    auto k = parse_kind(need_str(kind, "kind"));
    if (!k) throw ArgumentError(std::string("unknown kind '") + kind + "' (lines, roots, rulings, exceptional)");
    *out = new gosset_catalog{enumerate(*k, r)};
  });
}

gosset_status gosset_catalog_load(const char* path, gosset_catalog** out) {
  return guard([&] {
    need(out, "output");
    std::ifstream in(need_str(path, "path"), std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + path);
    *out = new gosset_catalog{read_catalog(in)};
  });
}

gosset_status gosset_catalog_save(const gosset_catalog* c, const char* path) {
  return guard([&] {
    const auto& cat = need(c, "catalog").cat;
    const std::string p = need_str(path, "path");
    const std::string tmp = p + ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) throw IoError("cannot write " + tmp);
      write_catalog(f, cat);
      if (!f.flush()) throw IoError("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), p.c_str()) != 0) throw IoError("cannot move " + tmp + " to " + p);
  });
}

gosset_status gosset_catalog_serialize(const gosset_catalog* c, gosset_string** out) {
  return guard([&] {
    std::ostringstream s;
    write_catalog(s, need(c, "catalog").cat);
    emit(out, s.str());
  });
}

void gosset_catalog_free(gosset_catalog* c) { delete c; }

gosset_status gosset_catalog_size(const gosset_catalog* c, size_t* out) {
  return guard([&] { need(out, "output") = need(c, "catalog").cat.size(); });
}

gosset_status gosset_catalog_rank(const gosset_catalog* c, int* out) {
  return guard([&] { need(out, "output") = need(c, "catalog").cat.rank(); });
}

gosset_status gosset_catalog_class(const gosset_catalog* c, size_t i, int64_t* coeffs, size_t capacity) {
  return guard([&] {
    const auto& cat = need(c, "catalog").cat;
    need(coeffs, "coefficient buffer");
    if (i >= cat.size()) throw ArgumentError("class index out of range");
    const auto n = static_cast<std::size_t>(cat.rank() + 1);
    if (capacity < n) throw ArgumentError("coefficient buffer needs " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) coeffs[k] = cat[i][static_cast<int>(k)];
  });
}

gosset_status gosset_catalog_pairing(const gosset_catalog* c, size_t i, size_t j, int64_t* out) {
  return guard([&] {
    const auto& cat = need(c, "catalog").cat;
    if (i >= cat.size() || j >= cat.size()) throw ArgumentError("class index out of range");
    need(out, "output") = pairing(cat[i], cat[j]);
  });
}

gosset_status gosset_subpolytope_table(int r, unsigned threads, gosset_string** out) {
  return guard([&] {
    std::ostringstream s;
    s << kSubpolytopeCsvHeader << '\n';
    verify_subpolytope_table(r, threads).write_csv_rows(s);
    emit(out, s.str());
  });
}

gosset_status gosset_graph_summary(int r, int v, unsigned threads, gosset_string** out) {
  return guard([&] {
    const auto lines = enumerate_lines(r);
    const auto g = build_degree_graph(lines, v);
    json cliques = json::array();
    for (std::size_t k = 1; k <= 10; ++k) {
      const auto n = count_cliques(g.adjacency, k, threads);
      if (n == 0) break;
      cliques.push_back(n);
    }
    json j{{"r", r}, {"degree", v}, {"vertices", g.size()}, {"edges", g.edge_count()}, {"cliques", cliques}};
    emit(out, j.dump() + "\n");
  });
}

int gosset_inscribed_feasible(int r, int n, int b) { return is_feasible(r, n, b) ? 1 : 0; }

gosset_status gosset_inscribed_each(int r, int n, int b, int classify_it, uint64_t limit, gosset_line_fn fn,
                                    void* user) {
  return guard([&] {
    if (!fn) throw ArgumentError("callback is null");
    require_feasible(r, n, b);
    const auto lines = enumerate_lines(r);
    struct Stop {};
    std::uint64_t emitted = 0;
    try {
      for_each_inscribed(lines, n, b, [&](const InscribedSimplex& s) {
        if (limit && emitted >= limit) throw Stop{};
        const auto text = simplex_json(lines, s, classify_it != 0).dump();
        ++emitted;
        if (fn(text.c_str(), text.size(), user)) throw Aborted{};
      });
    } catch (const Stop&) {
    }
  });
}

gosset_status gosset_inscribed_count(int r, int n, int b, unsigned threads, uint64_t* out) {
  return guard([&] {
    need(out, "output");
    const auto lines = enumerate_lines(r);
    *out = count_inscribed(lines, n, b, threads);
  });
}

gosset_status gosset_inscribed_centers(int r, int n, int b, unsigned threads, gosset_progress_fn progress, void* user,
                                       gosset_string** out, uint64_t* count) {
  return guard([&] {
    require_feasible(r, n, b);
    const auto lines = enumerate_lines(r);
    ProgressFn cb;
    std::size_t last = 0;
    if (progress)
      cb = [&](std::size_t done, std::size_t total) {
        // Roughly ten messages per run.
        if (done == total || done * 10 / total != last) {
          last = done * 10 / total;
          const auto msg = "A" + std::to_string(n) + "^" + std::to_string(r) + "(" + std::to_string(b) +
                           ") centers: " + std::to_string(done) + "/" + std::to_string(total) + " first vertices";
          progress(msg.c_str(), user);
        }
      };
    const auto cs = centers(lines, n, b, threads, cb);
    if (count) *count = cs.size();
    if (out) {
      std::string text;
      for (const auto& d : cs) text += class_json(d).dump() + "\n";
      emit(out, std::move(text));
    }
  });
}

gosset_status gosset_fano_sample(uint64_t seed, size_t count, gosset_string** out) {
  return guard([&] {
    need(out, "output");
    const auto lines = enumerate_lines(8);
    std::mt19937_64 rng(seed);
    std::string text;
    for (std::size_t i = 0; i < count; ++i) {
      const auto s = sample_inscribed(lines, 6, 1, rng);
      const auto st = fano_structure(lines, s);
      json blocks = json::array(), faces = json::array(), ext = json::array();
      for (std::size_t f = 0; f < 7; ++f) {
        std::array<std::uint32_t, 3> blk{};
        for (std::size_t k = 0; k < 3; ++k) blk[k] = st.labeled[static_cast<std::size_t>(st.blocks[f][k])];
        std::array<std::uint32_t, 4> face{};
        for (std::size_t k = 0; k < 4; ++k) face[k] = st.labeled[static_cast<std::size_t>(st.cornered_faces[f][k])];
        blocks.push_back(blk);
        faces.push_back(face);
        const auto e = extend_fano_to_A7(lines, s, blk);
        ext.push_back({{"block", blk},
                       {"l8", e.l8},
                       {"l8_alternative", e.l8_alternative},
                       {"complement_corner_line", e.complement_corner_line},
                       {"a7", e.a7.vertices}});
      }
      json j{{"vertices", s.vertices},
             {"center", class_json(s.center)},
             {"labeled", st.labeled},
             {"permutation", st.permutation},
             {"blocks", blocks},
             {"block_labels", st.blocks},
             {"cornered_faces", faces},
             {"corner_lines", st.corner_lines},
             {"fano_plane", verify_fano_steiner(st.blocks).pass},
             {"extensions", ext}};
      text += j.dump() + "\n";
    }
    emit(out, std::move(text));
  });
}

gosset_status gosset_cubes_sample(const char* kind, int r, uint64_t seed, size_t count, gosset_string** out) {
  return guard([&] {
    need(out, "output");
    const std::string k = need_str(kind, "kind");
    if (k != "3cube" && k != "4cube" && k != "obstruction")
      throw ArgumentError("unknown cube kind '" + k + "' (3cube, 4cube, obstruction)");
    if (k == "3cube" && r != 7 && r != 8) throw DomainError("3-cubes are built in S_7 and S_8");
    if (k != "3cube" && r != 8) throw DomainError(k + " needs r = 8");
    const auto lines = enumerate_lines(r);
    std::mt19937_64 rng(seed);
    std::string text;
    for (std::size_t i = 0; i < count; ++i) {
      json j;
      if (k == "3cube") {
        const auto s = sample_inscribed(lines, 2, 1, rng);
        const auto c = build_3cube(lines, s);
        j = {{"seed", s.vertices}, {"m", c.m}, {"vertices", c.vertices}, {"center", class_json(c.center)}};
      } else if (k == "4cube") {
        const auto s = sample_a3(lines, true, rng);
        const auto c = build_4cube(lines, s);
        j = {{"seed", s.vertices}, {"corner_line", cornering_line(lines, s)}, {"m", c.m},
             {"vertices", c.vertices}, {"center", class_json(c.center)}};
      } else {
        const auto s = sample_a3(lines, false, rng);
        const auto ob = check_4cube_obstruction(lines, s);
        json anti = json::array();
        for (const auto& [a, b] : ob.antipodal) anti.push_back({a, b});
        j = {{"seed", s.vertices},
             {"antipodal", anti},
             {"facets", ob.facets},
             {"uncornered_facets", ob.uncornered_facets},
             {"obstructed", ob.uncornered_facets == ob.facets}};
      }
      text += j.dump() + "\n";
    }
    emit(out, std::move(text));
  });
}

gosset_status gosset_steiner(const char* name, unsigned threads, gosset_string** out, int* passed) {
  return guard([&] {
    need(out, "output");
    auto n = parse_steiner_name(need_str(name, "name"));
    if (!n) throw ArgumentError(std::string("unknown system '") + name + "' (SA2S7, SA2S8, SB3S6, SB3S8, SC4S7)");
    const auto p = steiner_params(*n);
    const auto lines = enumerate_lines(p.r);
    const auto sys = build_steiner(lines, *n);
    const auto rep = verify_design(lines, sys, threads);
    const bool sums = block_sums_constant(lines, sys);
    const bool maximal = blocks_maximal(lines, sys);
    const bool weyl = weyl_invariant(lines, sys);
    auto j = to_json(sys);
    j["r"] = p.r;
    j["verify"] = {{"design", rep.pass},
                   {"determining_sets", rep.determining_sets},
                   {"counterexample", rep.counterexample},
                   {"block_sums", sums},
                   {"maximal", maximal},
                   {"weyl_invariant", weyl}};
    if (passed) *passed = rep.pass && sums && maximal && weyl;
    emit(out, j.dump() + "\n");
  });
}

gosset_status gosset_verify(const char* scope, int r, size_t sample, uint64_t seed, unsigned threads,
                            const char* format, gosset_progress_fn progress, void* user, gosset_string** out,
                            int* passed) {
  return guard([&] {
    need(out, "output");
    auto s = parse_scope(need_str(scope, "scope"));
    if (!s) throw ArgumentError(std::string("unknown scope '") + scope + "' (tables, theorems, steiner, all)");
    const std::string fmt = format ? format : "json";
    if (fmt != "json" && fmt != "csv") throw ArgumentError("format must be json or csv");
    VerifyConfig cfg;
    cfg.r = r;
    cfg.sample = sample;
    cfg.seed = seed;
    cfg.threads = threads;
    if (progress) cfg.progress = [&](const std::string& m) { progress(m.c_str(), user); };
    const auto rep = run_verify(*s, cfg);
    if (passed) *passed = rep.pass();
    if (fmt == "csv") {
      std::ostringstream o;
      rep.write_csv(o);
      emit(out, o.str());
    } else {
      emit(out, rep.to_json().dump(2) + "\n");
    }
  });
}

}  // extern "C"
