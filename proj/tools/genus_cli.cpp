#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "genus/bounds.hpp"
#include "genus/graph.hpp"
#include "genus/io.hpp"
#include "genus/oracle.hpp"
#include "genus/search.hpp"

namespace {

enum class Mode { Genus, Embed, All, Filter };

struct CliConfig {
  Mode mode = Mode::Genus;
  std::optional<int> genus_target;
  std::optional<int> filter_max;
  std::optional<int> filter_min;
  genus::SearchOptions search;
  std::string format = "graph6";
  std::string input_path;
  bool quiet = false;
  int jobs = 1;
};

struct WorkOutcome {
  std::string out;        // stdout payload, already formatted
  bool passed = false;    // filter verdict
  std::uint64_t embeddings = 0;
  bool undecided = false;
};

struct Tally {
  std::uint64_t read = 0;
  std::uint64_t passed = 0;
  std::uint64_t embeddings = 0;
  std::uint64_t undecided = 0;
};

std::unique_ptr<genus::GraphReader> open_reader(const CliConfig& cfg,
                                                std::istream& in) {
  if (cfg.format == "edges")
    return std::make_unique<genus::EdgeListReader>(in);
  return std::make_unique<genus::Graph6Reader>(in);
}

WorkOutcome process_record(const CliConfig& cfg, const genus::InputRecord& rec) {
  WorkOutcome w;
  std::ostringstream out;
  switch (cfg.mode) {
    case Mode::Genus: {
      genus::GenusResult r = genus::compute_genus(rec.graph, cfg.search);
      if (r.timed_out) {
        out << rec.index << " ?\n";
        w.undecided = true;
      } else {
        out << rec.index << ' ' << r.genus << '\n';
      }
      break;
    }
    case Mode::Embed: {
      genus::EmbeddingResult r =
          genus::find_embedding(rec.graph, cfg.genus_target, cfg.search);
      if (r.timed_out) {
        out << "#graph " << rec.index << " undecided\n\n";
        w.undecided = true;
      } else if (r.found) {
        genus::write_embedding(out, rec.graph, r.rotation, rec.index, r.genus);
        w.embeddings = 1;
      } else {
        out << "#graph " << rec.index << " none\n\n";
      }
      break;
    }
    case Mode::All: {
      genus::CountResult r = genus::enumerate_embeddings(
          rec.graph, *cfg.genus_target,
          [&](const genus::RotationSystem& rot) {
            genus::write_embedding(out, rec.graph, rot, rec.index,
                                   *cfg.genus_target);
          },
          cfg.search);
      if (r.timed_out) {
        out << "#graph " << rec.index << " undecided\n\n";
        w.undecided = true;
      }
      w.embeddings = r.count;
      break;
    }
    case Mode::Filter: {
      bool pass = true;
      bool undecided = false;
      if (cfg.filter_max) {
        genus::DecideResult r =
            genus::genus_at_most(rec.graph, *cfg.filter_max, cfg.search);
        undecided |= r.timed_out;
        pass &= r.at_most;
      }
      if (pass && !undecided && cfg.filter_min && *cfg.filter_min > 0) {
        genus::DecideResult r =
            genus::genus_at_most(rec.graph, *cfg.filter_min - 1, cfg.search);
        undecided |= r.timed_out;
        pass &= !r.at_most;
      }
      if (undecided) {
        w.undecided = true;
      } else if (pass) {
        out << rec.raw << '\n';
        w.passed = true;
      }
      break;
    }
  }
  w.out = out.str();
  return w;
}

void account(Tally& tally, const WorkOutcome& w) {
  ++tally.read;
  tally.passed += w.passed ? 1 : 0;
  tally.embeddings += w.embeddings;
  tally.undecided += w.undecided ? 1 : 0;
}

int run_serial(const CliConfig& cfg, genus::GraphReader& reader,
               std::ostream& out, Tally& tally) {
  genus::InputRecord rec;
  while (reader.next(rec)) {
    WorkOutcome w = process_record(cfg, rec);
    out << w.out;
    account(tally, w);
  }
  return 0;
}

// Bounded pipeline: the main thread reads and hands records to workers;
// finished results leave in input order.
class Pool {
 public:
  Pool(const CliConfig& cfg, std::ostream& out, Tally& tally)
      : cfg_(cfg), out_(out), tally_(tally), limit_(4 * cfg.jobs) {
    for (int i = 0; i < cfg.jobs; ++i)
      workers_.emplace_back([this] { work(); });
  }

  void submit(genus::InputRecord rec) {
    std::unique_lock lock(mu_);
    not_full_.wait(lock, [&] { return in_flight_ < limit_ || done_; });
    if (done_) return;  // a worker failed; finish() reports it
    ++in_flight_;
    queue_.push_back(std::move(rec));
    idle_.notify_one();
  }

  void finish() {
    {
      std::lock_guard lock(mu_);
      done_ = true;
    }
    idle_.notify_all();
    for (auto& t : workers_) t.join();
    if (error_) std::rethrow_exception(error_);
  }

 private:
  void work() {
    for (;;) {
      genus::InputRecord rec;
      {
        std::unique_lock lock(mu_);
        idle_.wait(lock, [&] { return done_ || !queue_.empty(); });
        if (queue_.empty()) return;
        rec = std::move(queue_.front());
        queue_.pop_front();
      }
      try {
        WorkOutcome w = process_record(cfg_, rec);
        std::unique_lock lock(mu_);
        results_.emplace_back(rec.index, std::move(w));
        drain_locked();
        --in_flight_;
        not_full_.notify_one();
      } catch (...) {
        std::unique_lock lock(mu_);
        if (!error_) error_ = std::current_exception();
        done_ = true;
        --in_flight_;
        not_full_.notify_all();
        idle_.notify_all();
        return;
      }
    }
  }

  void drain_locked() {
    for (;;) {
      auto it = results_.end();
      for (auto i = results_.begin(); i != results_.end(); ++i)
        if (i->first == next_out_) {
          it = i;
          break;
        }
      if (it == results_.end()) return;
      out_ << it->second.out;
      account(tally_, it->second);
      results_.erase(it);
      ++next_out_;
    }
  }

  const CliConfig& cfg_;
  std::ostream& out_;
  Tally& tally_;
  const std::size_t limit_;
  std::mutex mu_;
  std::condition_variable idle_, not_full_;
  std::deque<genus::InputRecord> queue_;
  std::vector<std::pair<std::uint64_t, WorkOutcome>> results_;
  std::uint64_t next_out_ = 1;
  std::size_t in_flight_ = 0;
  bool done_ = false;
  std::exception_ptr error_;
  std::vector<std::thread> workers_;
};

int run_parallel(const CliConfig& cfg, genus::GraphReader& reader,
                 std::ostream& out, Tally& tally) {
  Pool pool(cfg, out, tally);
  genus::InputRecord rec;
  while (reader.next(rec)) pool.submit(std::move(rec));
  pool.finish();
  return 0;
}

int run_oracle(bool histogram, std::uint64_t budget,
               genus::GraphReader& reader, std::ostream& out) {
  genus::OracleOptions oo;
  oo.budget = budget;
  genus::InputRecord rec;
  while (reader.next(rec)) {
    if (histogram) {
      auto hist = genus::oracle_genus_histogram(rec.graph, oo);
      while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
      out << rec.index << ':';
      for (auto h : hist) out << ' ' << h;
      out << '\n';
    } else {
      out << rec.index << ' ' << genus::oracle_genus(rec.graph, oo) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orientable genus of simple connected graphs"};
  app.get_formatter()->column_width(30);

  CliConfig cfg;
  std::string mode_name = "genus";
  app.add_option("--mode", mode_name, "genus | embed | all | filter")
      ->check(CLI::IsMember({"genus", "embed", "all", "filter"}));
  app.add_option("--genus", cfg.genus_target,
                 "target genus (required for --mode all, optional for embed)");
  app.add_option("--max", cfg.filter_max, "keep graphs of genus <= G");
  app.add_option("--min", cfg.filter_min, "keep graphs of genus >= G");
  app.add_flag_callback("--no-bounds",
                        [&] { cfg.search.nontrivial_bounds = false; },
                        "skip the walk-based lower bounds");
  app.add_flag_callback("--no-preprocess",
                        [&] { cfg.search.preprocess = false; },
                        "skip the degree-1/2 reduction");
  app.add_flag_callback("--no-bfs", [&] { cfg.search.bfs_relabel = false; },
                        "keep the input vertex numbering");
  app.add_flag_callback("--no-lemma-filter",
                        [&] { cfg.search.lemma_filter = false; },
                        "always scan every edge for criticality");
  app.add_option("--format", cfg.format, "graph6 | edges")
      ->check(CLI::IsMember({"graph6", "edges"}));
  app.add_option("--time-limit", cfg.search.time_limit_seconds,
                 "per-graph limit in seconds; over-limit graphs are "
                 "reported undecided");
  app.add_flag("--quiet", cfg.quiet, "suppress the summary line");
  app.add_option("--jobs", cfg.jobs, "worker threads (output stays in input order)")
      ->check(CLI::PositiveNumber);
  app.add_option("input", cfg.input_path, "input file (default: stdin)");

  bool oracle_mode = false;
  bool oracle_histogram = false;
  std::uint64_t oracle_budget = 100'000'000;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "brute-force reference results (testing aid)");
  oracle->group("");  // hidden
  oracle->fallthrough();
  oracle->add_flag("--histogram", oracle_histogram,
                   "embedding counts per genus instead of the genus");
  oracle->add_option("--budget", oracle_budget, "rotation-system budget");
  oracle->callback([&] { oracle_mode = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (mode_name == "genus") cfg.mode = Mode::Genus;
  else if (mode_name == "embed") cfg.mode = Mode::Embed;
  else if (mode_name == "all") cfg.mode = Mode::All;
  else cfg.mode = Mode::Filter;

  if (cfg.mode == Mode::All && !cfg.genus_target) {
    std::cerr << "error: --mode all requires --genus\n";
    return 2;
  }
  if (cfg.mode == Mode::Filter && !cfg.filter_max && !cfg.filter_min) {
    std::cerr << "error: --mode filter requires --max and/or --min\n";
    return 2;
  }

  std::ifstream file;
  if (!cfg.input_path.empty()) {
    file.open(cfg.input_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << cfg.input_path << '\n';
      return 2;
    }
  }
  std::istream& in = cfg.input_path.empty() ? std::cin : file;
  auto reader = open_reader(cfg, in);

  auto t0 = std::chrono::steady_clock::now();
  Tally tally;
  int rc = 0;
  try {
    if (oracle_mode) {
      rc = run_oracle(oracle_histogram, oracle_budget, *reader, std::cout);
    } else if (cfg.jobs > 1) {
      rc = run_parallel(cfg, *reader, std::cout, tally);
    } else {
      rc = run_serial(cfg, *reader, std::cout, tally);
    }
  } catch (const genus::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cout.flush();

  if (!cfg.quiet && !oracle_mode) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    std::ostringstream line;
    line << "graphs " << tally.read;
    if (cfg.mode == Mode::Filter) line << ", passed " << tally.passed;
    if (cfg.mode == Mode::Embed || cfg.mode == Mode::All)
      line << ", embeddings " << tally.embeddings;
    if (tally.undecided > 0) line << ", undecided " << tally.undecided;
    line << ", seconds " << secs;
    std::cerr << line.str() << '\n';
  }
  return rc;
}
