// gosset: command-line front end over the C API.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gosset.h"

namespace fs = std::filesystem;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInvariant = 3 };

struct Config {
  unsigned threads = 0;
  std::uint64_t seed = 42;
  std::string cache_dir;
  bool quiet = false;
};

struct Failure {
  int code;
};

int exit_for(gosset_status s) {
  switch (s) {
    case GOSSET_OK: return kPass;
    case GOSSET_ERR_ARGUMENT:
    case GOSSET_ERR_DOMAIN: return kUsage;
    case GOSSET_ERR_INVARIANT: return kInvariant;
    default: return kFail;
  }
}

void ok(gosset_status s) {
  if (s == GOSSET_OK) return;
  std::cerr << "gosset: " << gosset_status_name(s) << " error: " << gosset_last_error() << "\n";
  throw Failure{exit_for(s)};
}

// Owns a gosset_string.
struct Text {
  gosset_string* s = nullptr;
  ~Text() { gosset_string_free(s); }
  std::string_view view() const { return {gosset_string_data(s), gosset_string_size(s)}; }
};

void progress_to_stderr(const char* msg, void* user) {
  if (!static_cast<const Config*>(user)->quiet) std::cerr << "[gosset] " << msg << "\n";
}

fs::path cache_dir(const Config& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("GOSSET_CACHE_DIR"); env && *env) return env;
  return "gosset-cache";
}

void write_file(const fs::path& path, std::string_view data) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !f.write(data.data(), static_cast<std::streamsize>(data.size()))) {
    std::cerr << "gosset: cannot write " << path.string() << "\n";
    throw Failure{kFail};
  }
}

void print(std::string_view data) { std::cout.write(data.data(), static_cast<std::streamsize>(data.size())); }

// Loads the cached catalog or builds and caches it.
gosset_catalog* cached_catalog(const Config& cfg, const std::string& kind, int r) {
  const auto dir = cache_dir(cfg);
  const auto path = dir / (kind + "-r" + std::to_string(r) + ".jsonl");
  gosset_catalog* c = nullptr;
  if (fs::exists(path)) {
    ok(gosset_catalog_load(path.string().c_str(), &c));
    int rank = 0;
    ok(gosset_catalog_rank(c, &rank));
    if (rank != r) {
      gosset_catalog_free(c);
      std::cerr << "gosset: cached catalog " << path.string() << " has rank " << rank << "\n";
      throw Failure{kInvariant};
    }
    return c;
  }
  ok(gosset_catalog_build(kind.c_str(), r, &c));
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    gosset_catalog_free(c);
    std::cerr << "gosset: cannot create cache directory " << dir.string() << ": " << ec.message() << "\n";
    throw Failure{kFail};
  }
  if (auto s = gosset_catalog_save(c, path.string().c_str()); s != GOSSET_OK) {
    gosset_catalog_free(c);
    ok(s);
  }
  if (!cfg.quiet) std::cerr << "[gosset] cached " << path.string() << "\n";
  return c;
}

int cmd_catalog(const Config& cfg, const std::string& kind, int r, const std::string& out) {
  gosset_catalog* c = cached_catalog(cfg, kind, r);
  size_t n = 0;
  auto s = gosset_catalog_size(c, &n);
  if (s == GOSSET_OK && !out.empty()) {
    Text t;
    s = gosset_catalog_serialize(c, &t.s);
    if (s == GOSSET_OK) write_file(out, t.view());
  }
  gosset_catalog_free(c);
  ok(s);
  std::cout << "count: " << n << "\n";
  return kPass;
}

int cmd_graph(const Config& cfg, int r, int v, bool table) {
  Text t;
  if (table)
    ok(gosset_subpolytope_table(r, cfg.threads, &t.s));
  else
    ok(gosset_graph_summary(r, v, cfg.threads, &t.s));
  print(t.view());
  return kPass;
}

struct Stream {
  std::uint64_t n = 0;
};

int emit_line(const char* line, size_t len, void* user) {
  std::cout.write(line, static_cast<std::streamsize>(len));
  std::cout.put('\n');
  ++static_cast<Stream*>(user)->n;
  return std::cout ? 0 : 1;
}

int cmd_inscribed(const Config& cfg, int r, int n, int b, bool classify, bool centers_only, bool count_only,
                  std::uint64_t limit, const std::string& out) {
  if (!gosset_inscribed_feasible(r, n, b)) {
    // Let the library produce the message citing the feasibility table.
    std::uint64_t dummy = 0;
    ok(gosset_inscribed_count(r, n, b, cfg.threads, &dummy));
  }
  if (centers_only) {
    Text t;
    std::uint64_t count = 0;
    ok(gosset_inscribed_centers(r, n, b, cfg.threads, progress_to_stderr, const_cast<Config*>(&cfg),
                                out.empty() ? nullptr : &t.s, &count));
    if (!out.empty()) write_file(out, t.view());
    std::cout << "count: " << count << "\n";
    return kPass;
  }
  if (count_only) {
    std::uint64_t count = 0;
    ok(gosset_inscribed_count(r, n, b, cfg.threads, &count));
    std::cout << "count: " << count << "\n";
    return kPass;
  }
  Stream st;
  ok(gosset_inscribed_each(r, n, b, classify ? 1 : 0, limit, emit_line, &st));
  if (!cfg.quiet) std::cerr << "[gosset] " << st.n << " simplexes\n";
  return kPass;
}

int cmd_fano(const Config& cfg, std::size_t count) {
  Text t;
  ok(gosset_fano_sample(cfg.seed, count, &t.s));
  print(t.view());
  return kPass;
}

int cmd_cubes(const Config& cfg, const std::string& kind, int r, std::size_t count) {
  Text t;
  ok(gosset_cubes_sample(kind.c_str(), r, cfg.seed, count, &t.s));
  print(t.view());
  return kPass;
}

const std::vector<std::string> kSystems{"SA2S7", "SA2S8", "SB3S6", "SB3S8", "SC4S7"};

int cmd_steiner(const Config& cfg, std::vector<std::string> names) {
  if (names.empty()) names = kSystems;
  bool all = true;
  for (const auto& name : names) {
    Text t;
    int passed = 0;
    ok(gosset_steiner(name.c_str(), cfg.threads, &t.s, &passed));
    print(t.view());
    all = all && passed;
  }
  return all ? kPass : kFail;
}

int cmd_verify(const Config& cfg, const std::string& scope, int r, std::size_t sample, const std::string& format) {
  Text t;
  int passed = 0;
  ok(gosset_verify(scope.c_str(), r, sample, cfg.seed, cfg.threads, format.c_str(), progress_to_stderr,
                   const_cast<Config*>(&cfg), &t.s, &passed));
  print(t.view());
  if (!passed) std::cerr << "gosset: verification failed (see \"failures\" in the report)\n";
  return passed ? kPass : kFail;
}

// Writes every catalog, table, center set and Steiner system under `dir`.
int cmd_export(const Config& cfg, const fs::path& dir, std::vector<std::string> what) {
  auto wants = [&](const char* w) {
    if (what.empty()) return true;
    for (const auto& x : what)
      if (x == w || x == "all") return true;
    return false;
  };
  const char* kinds[] = {"lines", "roots", "rulings", "exceptional"};
  if (wants("catalogs"))
    for (int r = 3; r <= 8; ++r)
      for (const char* kind : kinds) {
        gosset_catalog* c = cached_catalog(cfg, kind, r);
        Text t;
        auto s = gosset_catalog_serialize(c, &t.s);
        gosset_catalog_free(c);
        ok(s);
        write_file(dir / "catalogs" / (std::string(kind) + "-r" + std::to_string(r) + ".jsonl"), t.view());
      }
  if (wants("tables")) {
    std::string csv;
    for (int r = 3; r <= 8; ++r) {
      Text t;
      ok(gosset_subpolytope_table(r, cfg.threads, &t.s));
      auto v = t.view();
      if (r > 3) v.remove_prefix(v.find('\n') + 1);
      csv += v;
    }
    write_file(dir / "subpolytopes.csv", csv);
  }
  if (wants("centers"))
    for (int b = 1; b <= 3; ++b)
      for (int r = 3; r <= 8; ++r)
        for (int n = 1; n <= 7; ++n) {
          if (!gosset_inscribed_feasible(r, n, b)) continue;
          Text t;
          std::uint64_t count = 0;
          ok(gosset_inscribed_centers(r, n, b, cfg.threads, progress_to_stderr, const_cast<Config*>(&cfg), &t.s,
                                      &count));
          write_file(dir / "centers" /
                         ("A" + std::to_string(n) + "-r" + std::to_string(r) + "-b" + std::to_string(b) + ".jsonl"),
                     t.view());
        }
  if (wants("steiner"))
    for (const auto& name : kSystems) {
      Text t;
      int passed = 0;
      ok(gosset_steiner(name.c_str(), cfg.threads, &t.s, &passed));
      write_file(dir / "steiner" / (name + ".json"), t.view());
    }
  std::cout << "exported: " << dir.string() << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lines on del Pezzo surfaces and Gosset polytopes: enumeration and verification"};
  app.set_version_flag("--version", std::string(gosset_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--threads", cfg.threads, "worker threads (0 = hardware concurrency)");
  app.add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "catalog cache (default: $GOSSET_CACHE_DIR or ./gosset-cache)");
  app.add_flag("-q,--quiet", cfg.quiet, "no progress messages");

  const std::vector<std::string> kind_names{"lines", "roots", "rulings", "exceptional"};

  std::string kind = "lines", out;
  int r = 8;
  auto* catalog = app.add_subcommand("catalog", "build or load a class catalog and print its size");
  catalog->add_option("--kind", kind)->check(CLI::IsMember(kind_names))->capture_default_str();
  catalog->add_option("--r", r)->required()->check(CLI::Range(3, 8));
  catalog->add_option("--out", out, "also write the catalog here");

  int v = 0;
  bool table = false;
  auto* graph = app.add_subcommand("graph", "summarize the intersection graph of lines");
  graph->add_option("--r", r)->required()->check(CLI::Range(3, 8));
  graph->add_option("--v", v, "intersection number of an edge")->check(CLI::Range(0, 3))->capture_default_str();
  graph->add_flag("--table", table, "subpolytope count table as CSV");

  int n = 1, b = 1;
  bool classify = false, centers_only = false, count_only = false;
  std::uint64_t limit = 0;
  auto* inscribed = app.add_subcommand("inscribed", "inscribed simplexes A_n^r(b) or their centers");
  inscribed->add_option("--r", r)->required()->check(CLI::Range(3, 8));
  inscribed->add_option("--n", n)->required()->check(CLI::Range(1, 8));
  inscribed->add_option("--b", b)->check(CLI::Range(1, 3))->capture_default_str();
  inscribed->add_flag("--classify", classify, "tag cornered/uncornered");
  auto* co = inscribed->add_flag("--centers-only", centers_only, "print the number of distinct centers");
  inscribed->add_flag("--count", count_only, "print the number of simplexes")->excludes(co);
  inscribed->add_option("--limit", limit, "stop after this many simplexes");
  inscribed->add_option("--out", out, "with --centers-only, write the centers here");

  std::size_t count = 1;
  auto* fano = app.add_subcommand("fano", "sampled A_6^8(1) with Fano structure and A_7 extensions");
  fano->add_option("--count", count)->check(CLI::PositiveNumber)->capture_default_str();

  std::string cube_kind = "4cube";
  auto* cubes = app.add_subcommand("cubes", "sampled 3-cubes, 4-cubes or the 4-cube obstruction");
  cubes->add_option("--kind", cube_kind)
      ->check(CLI::IsMember({"3cube", "4cube", "obstruction"}))
      ->capture_default_str();
  cubes->add_option("--r", r)->check(CLI::Range(7, 8))->capture_default_str();
  cubes->add_option("--count", count)->check(CLI::PositiveNumber)->capture_default_str();

  std::vector<std::string> names;
  auto* steiner = app.add_subcommand("steiner", "build and check the Steiner systems (all by default)");
  steiner->add_option("--name", names)->check(CLI::IsMember(kSystems));

  std::string scope = "all", format = "json";
  std::size_t sample = 200;
  int vr = 0;
  auto* verify = app.add_subcommand("verify", "check count tables and theorems; exit 0 iff all pass");
  verify->add_option("--scope", scope)
      ->check(CLI::IsMember({"tables", "theorems", "steiner", "all"}))
      ->capture_default_str();
  verify->add_option("--r", vr, "rank (default: all ranks)")->check(CLI::Range(3, 8));
  verify->add_option("--sample", sample, "instances per sampled check")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string dir;
  std::vector<std::string> what;
  auto* exp = app.add_subcommand("export", "write catalogs, tables, centers and Steiner systems to a directory");
  exp->add_option("--out", dir)->required();
  exp->add_option("--what", what)->check(CLI::IsMember({"catalogs", "tables", "centers", "steiner", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    int rc = kPass;
    if (*catalog) rc = cmd_catalog(cfg, kind, r, out);
    if (*graph) rc = cmd_graph(cfg, r, v, table);
    if (*inscribed) rc = cmd_inscribed(cfg, r, n, b, classify, centers_only, count_only, limit, out);
    if (*fano) rc = cmd_fano(cfg, count);
    if (*cubes) rc = cmd_cubes(cfg, cube_kind, r, count);
    if (*steiner) rc = cmd_steiner(cfg, names);
    if (*verify) rc = cmd_verify(cfg, scope, vr, sample, format);
    if (*exp) rc = cmd_export(cfg, dir, what);
    std::cout.flush();
    return rc;
  } catch (const Failure& f) {
    return f.code;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "gosset: " << e.what() << "\n";
    return kFail;
  }
}
