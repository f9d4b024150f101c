// Copyright 2026 The dbring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// dbring command line. run_cli is the whole program minus process plumbing,
// so tests can drive it with string streams.
//
// Exit codes: 0 ok, 1 verification failure or decode miss, 2 bad arguments
// or input, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dbring/dbring.hpp"

namespace dbring::cli {

enum Exit : int { kOk = 0, kFailed = 1, kBadArgs = 2, kBudget = 3 };

inline std::uint64_t budget_from_env(std::uint64_t fallback = kDefaultBudget) {
  const char* env = std::getenv("DBMAP_BUDGET");
  if (!env || !*env) return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ArgumentError(std::string("DBMAP_BUDGET is not a positive integer: ") + env);
  }
}

inline Range parse_range(const std::string& text, const char* name) {
  Range r;
  try {
    const auto colon = text.find(':');
    std::size_t used = 0;
    if (colon == std::string::npos) {
      r.lo = r.hi = static_cast<unsigned>(std::stoul(text, &used));
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string a = text.substr(0, colon);
      const std::string b = text.substr(colon + 1);
      r.lo = static_cast<unsigned>(std::stoul(a, &used));
      if (used != a.size()) throw std::invalid_argument(text);
      r.hi = static_cast<unsigned>(std::stoul(b, &used));
      if (used != b.size()) throw std::invalid_argument(text);
    }
  } catch (const std::exception&) {
    throw ArgumentError(std::string("bad ") + name + " range '" + text + "' (use a or a:b)");
  }
  return r;
}

// Writes to the file if a path is given, else to `out`.
template <typename F>
void emit(const std::string& path, std::ostream& out, F write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ArgumentError("cannot open " + path + " for writing");
  write(f);
}

inline CyclicMap load_map(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ArgumentError("cannot open " + path);
  return read_dbmap(f);
}

inline CompositionSpec load_sidecar(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("sidecar " + path + ": " + e.what());
  }
  return spec_from_json(j);
}

// Windows as m lines of n symbols each; blank lines between windows are
// ignored. A DBMAP header instead introduces a single m x n window.
inline std::vector<Pattern> read_windows(std::istream& in, std::size_t m, std::size_t n,
                                         unsigned k) {
  std::vector<Pattern> out;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (text.rfind("DBMAP", 0) == 0) {
    const CyclicMap w = parse_dbmap(text);
    if (w.height() != m || w.width() != n || w.k() != k) {
      throw ArgumentError("window map must be " + std::to_string(m) + "x" + std::to_string(n) +
                          " over k=" + std::to_string(k));
    }
    out.push_back(w.window(0, 0, m, n));
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  std::vector<Symbol> cells;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.size() != n) throw ArgumentError("window rows must have " + std::to_string(n) + " symbols");
    for (char ch : line) {
      const unsigned s = char_symbol(ch);
      if (s >= k) throw ArgumentError("window symbol outside alphabet");
      cells.push_back(static_cast<Symbol>(s));
    }
    if (cells.size() == m * n) {
      out.emplace_back(m, n, k, std::move(cells));
      cells.clear();
    }
  }
  if (!cells.empty()) throw ArgumentError("incomplete window at end of input");
  if (out.empty()) throw ArgumentError("no window given");
  return out;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline CsvTable read_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open " + path);
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(f, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      t.header = cells;
      first = false;
    } else {
      if (cells.size() != t.header.size()) throw ArgumentError(path + ": ragged CSV row");
      t.rows.push_back(cells);
    }
  }
  return t;
}

// Compares printed cells against both renderings; returns the number of
// cells that match neither.
inline int compare_table1(const std::string& path, std::ostream& out) {
  const CsvTable t = read_csv(path);
  if (t.header != std::vector<std::string>{"m", "n", "k", "numerator", "denominator"}) {
    throw ArgumentError(path + ": expected columns m,n,k,numerator,denominator");
  }
  int exact = 0, printed = 0, diffs = 0;
  for (const auto& c : t.rows) {
    const auto row = table1_row(std::stoul(c[0]), std::stoul(c[1]), std::stoul(c[2]));
    const std::string want = c[3] + "/" + c[4];
    if (row.exact.str() == want) ++exact;
    if (row.printed.str() == want) {
      ++printed;
    } else if (row.exact.str() != want) {
      ++diffs;
      out << "diff m=" << c[0] << " n=" << c[1] << " k=" << c[2] << ": printed " << want
          << ", computed " << row.exact.str() << ", double replay " << row.printed.str() << '\n';
    }
  }
  out << "table1: " << t.rows.size() << " printed cells, " << exact << " equal the exact value, "
      << printed << " equal the double replay, " << diffs << " differ from both\n";
  return diffs;
}

inline int compare_table2(const std::string& path, std::ostream& out) {
  const CsvTable t = read_csv(path);
  if (t.header != std::vector<std::string>{"k", "n", "N", "Ntilde", "percent"}) {
    throw ArgumentError(path + ": expected columns k,n,N,Ntilde,percent");
  }
  int exact = 0, printed = 0, diffs = 0;
  for (const auto& c : t.rows) {
    const auto row = table2_row(std::stoul(c[0]), std::stoul(c[1]));
    const auto ex = std::make_tuple(row.N.str(), row.Ntilde.str(), row.percent);
    const auto pr = std::make_tuple(row.printed_N.str(), row.printed_Ntilde.str(), row.printed_percent);
    const auto want = std::make_tuple(c[2], c[3], c[4]);
    if (ex == want) ++exact;
    if (pr == want) {
      ++printed;
    } else if (ex != want) {
      ++diffs;
      out << "diff k=" << c[0] << " n=" << c[1] << ": printed " << c[2] << "/" << c[3] << " "
          << c[4] << "%, computed " << row.N << "/" << row.Ntilde << " " << row.percent
          << "%, double replay " << row.printed_N << "/" << row.printed_Ntilde << " "
          << row.printed_percent << "%\n";
    }
  }
  out << "table2: " << t.rows.size() << " printed rows, " << exact << " equal the exact value, "
      << printed << " equal the double replay, " << diffs << " differ from both\n";
  return diffs;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in) {
  CLI::App app{"de Bruijn rings and almost perfect maps", "dbring"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t budget = 0;
  app.add_option("--budget", budget, "window/edge budget (default 1e8 or DBMAP_BUDGET)");

  unsigned m = 0, n = 0, k = 0, k1 = 0, k2 = 0, trim = 0;
  std::string output, sidecar, graph, file, window, map_path;
  std::string m_range, n_range, k_range, compare;
  bool do_verify = false, no_trim = false, json = false, csv = false, as_printed = false;
  bool want_t1 = false, want_t2 = false;
  unsigned threads = 1;

  auto* seq = app.add_subcommand("seq", "de Bruijn sequence of order n over k letters");
  seq->add_option("--k", k, "alphabet size")->required();
  seq->add_option("--n", n, "window length")->required();
  seq->add_option("-o,--output", output, "output file");

  auto* ring = app.add_subcommand("ring", "(m,n)_k de Bruijn ring as DBMAP");
  ring->add_option("--m", m)->required();
  ring->add_option("--n", n)->required();
  ring->add_option("--k", k)->required();
  ring->add_option("--trim", trim, "remove stair columns for i=1..j");
  ring->add_flag("--verify", do_verify, "scan all windows before writing");
  ring->add_option("-o,--output", output);
  ring->add_option("--graph", graph, "also write the ring graph edge list here");

  auto* mapc = app.add_subcommand("map", "almost perfect (M,N;m,n)_{k1*k2} map as DBMAP");
  mapc->add_option("--m", m)->required();
  mapc->add_option("--n", n)->required();
  mapc->add_option("--k1", k1)->required();
  mapc->add_option("--k2", k2)->required();
  mapc->add_flag("--no-trim", no_trim, "skip column trimming (lcm dimensions)");
  mapc->add_flag("--verify", do_verify);
  mapc->add_option("-o,--output", output);
  mapc->add_option("--sidecar", sidecar, "write composition parameters as JSON here");

  auto* ver = app.add_subcommand("verify", "check that every window occurs at most once");
  ver->add_option("file", file, "DBMAP file, - for stdin")->required();
  ver->add_option("--m", m, "window rows (default from header)");
  ver->add_option("--n", n, "window cols (default from header)");
  ver->add_flag("--json", json);
  ver->add_option("--threads", threads)->check(CLI::Range(1u, 256u));

  auto* dec = app.add_subcommand("decode", "position of a window in a composed map");
  dec->add_option("--map", map_path)->required();
  dec->add_option("--sidecar", sidecar)->required();
  dec->add_option("--window", window, "window file (default stdin)");

  auto* st = app.add_subcommand("stats", "counting tables");
  auto* t1 = st->add_flag("--table1", want_t1, "row-aperiodic ratios");
  auto* t2 = st->add_flag("--table2", want_t2, "square map coverage");
  t1->excludes(t2);
  st->add_option("--m", m_range, "m range a or a:b (table1)");
  st->add_option("--n", n_range, "n range");
  st->add_option("--k", k_range, "k range");
  st->add_flag("--csv", csv);
  st->add_flag("--as-printed", as_printed, "replay the double-precision rendering");
  st->add_option("--compare", compare, "report cells differing from a printed-table CSV");

  std::vector<const char*> argv{"dbring"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    if (budget == 0) budget = budget_from_env();

    if (*seq) {
      const Word w = debruijn_sequence(k, n, budget);
      emit(output, out, [&](std::ostream& o) {
        for (Symbol s : w.letters) o << symbol_char(s);
        o << '\n';
      });
      return kOk;
    }

    if (*ring) {
      if (m < 2 || n < 2 || k < 2) throw ArgumentError("ring needs m, n, k >= 2");
      const RingGraph g = build_ring_graph(m, n, k, budget);
      if (!graph.empty()) emit(graph, out, [&](std::ostream& o) { write_edge_list(o, g); });
      const CyclicMap r = trim_ring(build_ring_from_cycle(g, euler_cycle(g)), trim);
      if (do_verify) {
        const auto rep = verify(r, m, n, {budget, 1});
        const bool ok = trim == 0 ? rep.is_de_bruijn_ring : rep.is_sub_perfect;
        if (!ok) {
          write_report(err, rep);
          return kFailed;
        }
      }
      emit(output, out, [&](std::ostream& o) { write_dbmap(o, r); });
      return kOk;
    }

    if (*mapc) {
      const CompositionSpec s = plan_composition(m, n, k1, k2, !no_trim);
      const ProductMap pm = build_almost_perfect(s, budget);
      if (do_verify) {
        const auto rep = verify(pm.map, m, n, {budget, 1});
        if (!rep.is_sub_perfect) {
          write_report(err, rep);
          return kFailed;
        }
      }
      if (!sidecar.empty()) {
        emit(sidecar, out, [&](std::ostream& o) { o << spec_to_json(s).dump(2) << '\n'; });
      }
      emit(output, out, [&](std::ostream& o) { write_dbmap(o, pm.map); });
      return kOk;
    }

    if (*ver) {
      const CyclicMap map = file == "-" ? read_dbmap(in) : load_map(file);
      const std::size_t wm = m ? m : map.win_rows();
      const std::size_t wn = n ? n : map.win_cols();
      const auto rep = verify(map, wm, wn, {budget, threads});
      if (json) {
        out << report_to_json(rep).dump(2) << '\n';
      } else {
        write_report(out, rep);
      }
      return rep.is_sub_perfect ? kOk : kFailed;
    }

    if (*dec) {
      const CompositionSpec s = load_sidecar(sidecar);
      const ProductMap pm = ProductMap::from_map(load_map(map_path), s);
      const DecoderIndex idx = build_index(pm);
      std::vector<Pattern> windows;
      if (window.empty() || window == "-") {
        windows = read_windows(in, s.m, s.n, s.k());
      } else {
        std::ifstream f(window);
        if (!f) throw ArgumentError("cannot open " + window);
        windows = read_windows(f, s.m, s.n, s.k());
      }
      for (const auto& w : windows) {
        const Position p = decode(idx, w);
        out << p.row << ' ' << p.col << '\n';
      }
      return kOk;
    }

    if (*st) {
      if (!want_t1 && !want_t2) throw ArgumentError("stats needs --table1 or --table2");
      if (want_t1) {
        if (!compare.empty()) return compare_table1(compare, out) == 0 ? kOk : kFailed;
        const auto rows = table1(m_range.empty() ? Range{2, 6} : parse_range(m_range, "m"),
                                 n_range.empty() ? Range{2, 6} : parse_range(n_range, "n"),
                                 k_range.empty() ? Range{2, 5} : parse_range(k_range, "k"));
        if (csv) {
          write_table1_csv(out, rows, as_printed);
        } else {
          write_table1_text(out, rows, as_printed);
        }
      } else {
        if (!m_range.empty()) throw ArgumentError("table2 has no m range (square windows)");
        if (!compare.empty()) return compare_table2(compare, out) == 0 ? kOk : kFailed;
        const auto rows = table2(k_range.empty() ? Range{2, 5} : parse_range(k_range, "k"),
                                 n_range.empty() ? Range{2, 6} : parse_range(n_range, "n"));
        if (csv) {
          write_table2_csv(out, rows, as_printed);
        } else {
          write_table2_text(out, rows, as_printed);
        }
      }
      return kOk;
    }
  } catch (const NotInMapError& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  }
  return kBadArgs;
}

}  // namespace dbring::cli
