// Copyright 2023 The Authors.
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

// Command-line front end. Reads JSON from --input or standard input and
// writes one JSON document per line.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mcube/cryptomorph.h"
#include "mcube/enumerate.h"
#include "mcube/error.h"
#include "mcube/io.h"
#include "mcube/matricube.h"
#include "mcube/matroid.h"
#include "mcube/permarray.h"
#include "mcube/represent.h"
#include "mcube/transforms.h"

namespace {

using namespace mcube;

constexpr int kExitFailure = 1;
constexpr int kExitMalformed = 2;

// Raised for a failed check whose report has already been written.
struct CheckFailed {};

struct Options {
  std::string input = "-";
  bool grid = false;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json read_json(const std::string& path) { return parse_json(read_text(path)); }

void emit(const Json& j) { std::cout << dump(j) << '\n'; }

void emit(const Matricube& m, const Options& o) {
  if (o.grid) {
    std::cout << render_grid(m.table());
  } else {
    emit(serialize(m));
  }
}

void emit(const PointSet& s, const Options& o) {
  if (o.grid) {
    std::cout << render_grid(s);
  } else {
    emit(serialize(s));
  }
}

void check(const ValidationReport& r) {
  if (r.ok()) {
    emit(Json{{"ok", true}});
    return;
  }
  std::cerr << r.to_string() << '\n';
  throw CheckFailed{};
}

Json indices(const std::vector<std::size_t>& v) { return Json(v); }

CLI::App* command(CLI::App& parent, const std::string& name,
                  const std::string& help, Options& o, bool grid = false) {
  CLI::App* sub = parent.add_subcommand(name, help);
  sub->add_option("-i,--input", o.input, "JSON input file, - for stdin")
      ->capture_default_str();
  if (grid) sub->add_flag("--grid", o.grid, "Print a grid instead of JSON");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matricubes: rank functions on hypercuboids"};
  app.require_subcommand(1);
  Options o;
  std::function<void()> run;

  auto matricube = [&] { return matricube_from_json(read_json(o.input)); };

  bool all = false;
  command(app, "validate", "Check R1-R3 on a rank table", o)
      ->callback([&] {
        run = [&] {
          RankTable t = rank_table_from_json(read_json(o.input));
          check(validate_rank_axioms(t, all ? ReportMode::kAll
                                            : ReportMode::kFirst));
        };
      })
      ->add_flag("--all", all, "Report every violation");

  command(app, "info", "Width, rank, simpleness, loops and coloops", o)
      ->callback([&] {
        run = [&] {
          Matricube m = matricube();
          std::vector<std::size_t> loops, coloops;
          for (std::size_t i = 0; i < m.dimension(); ++i) {
            if (m.width()[i] == 0) continue;
            if (is_loop(m, i)) loops.push_back(i);
            if (is_coloop(m, i)) coloops.push_back(i);
          }
          Json j;
          j["width"] = serialize(m.width());
          j["rank"] = m.rank();
          j["simple"] = is_simple(m);
          j["loops"] = indices(loops);
          j["coloops"] = indices(coloops);
          emit(j);
        };
      });

  bool build = false;
  command(app, "flats", "Flats, or a rank table from flats with --build", o,
          true)
      ->callback([&] {
        run = [&] {
          if (build) {
            emit(matricube_from_flats(
                     FlatSet(point_set_from_json(read_json(o.input)))),
                 o);
          } else {
            emit(flats_of(matricube()), o);
          }
        };
      })
      ->add_flag("--build", build, "Read flats and print the rank table");

  bool closure = false;
  CLI::App* circuits = command(
      app, "circuits", "Circuits, or a rank table from circuits with --build",
      o, true);
  circuits->add_flag("--closure", closure,
                     "Print all of CCir, including non-circuits");
  circuits->add_flag("--build", build, "Read circuits and print the rank table");
  circuits->callback([&] {
    run = [&] {
      if (build) {
        emit(matricube_from_circuits(
                 CircuitSet(point_set_from_json(read_json(o.input)))),
             o);
      } else if (closure) {
        emit(ccir_of(matricube()), o);
      } else {
        emit(circuits_of(matricube()), o);
      }
    };
  });

  command(app, "independents",
          "Independents, or a rank table from independents with --build", o,
          true)
      ->callback([&] {
        run = [&] {
          if (build) {
            emit(matricube_from_independents(
                     IndependentSet(point_set_from_json(read_json(o.input)))),
                 o);
          } else {
            emit(independents_of(matricube()), o);
          }
        };
      })
      ->add_flag("--build", build, "Read independents and print the rank table");

  std::string def;
  command(app, "bases", "Basis candidates of one kind", o, true)
      ->callback([&] {
        run = [&] { emit(basis_candidates(matricube(), parse_basis_kind(def)), o); };
      })
      ->add_option("--def", def, "Kind a, b, c, d, e or f")
      ->required();

  command(app, "dual", "Dual matricube", o, true)->callback([&] {
    run = [&] { emit(dual(matricube()), o); };
  });

  std::size_t dir = 0;
  command(app, "delete", "Delete one step of a direction", o, true)
      ->callback([&] { run = [&] { emit(deletion(matricube(), dir), o); }; })
      ->add_option("--dir", dir, "Direction index")
      ->required();
  command(app, "contract", "Contract one step of a direction", o, true)
      ->callback([&] { run = [&] { emit(contraction(matricube(), dir), o); }; })
      ->add_option("--dir", dir, "Direction index")
      ->required();

  std::string ops;
  command(app, "minor", "Apply deletions and contractions in order", o, true)
      ->callback([&] {
        run = [&] { emit(minor(matricube(), parse_minor_ops(ops)), o); };
      })
      ->add_option("--ops", ops, "Steps such as d0,c1")
      ->required();

  std::string second;
  command(app, "sum", "Direct sum with a second matricube", o, true)
      ->callback([&] {
        run = [&] {
          Matricube b = matricube_from_json(read_json(second));
          emit(direct_sum(matricube(), b), o);
        };
      })
      ->add_option("second", second, "Second matricube file")
      ->required();

  bool text = false;
  command(app, "tutte", "Tutte polynomial", o)
      ->callback([&] {
        run = [&] {
          TwoVarPolynomial p = tutte(matricube());
          if (text) {
            std::cout << p.to_string() << '\n';
          } else {
            emit(serialize(p));
          }
        };
      })
      ->add_flag("--text", text, "Print as text");

  std::string at;
  command(app, "local-matroid", "Local matroid at a point", o)
      ->callback([&] {
        run = [&] {
          emit(serialize(local_matroid(matricube(), Point(parse_int_list(at)))));
        };
      })
      ->add_option("--at", at, "Point x1,...,xd")
      ->required();

  CLI::App* coherent =
      app.add_subcommand("coherent", "Coherent complexes of matroids");
  coherent->require_subcommand(1);
  command(*coherent, "extract", "Local matroids of a matricube", o)
      ->callback([&] {
        run = [&] { emit(serialize(coherent_complex_of(matricube()))); };
      });
  command(*coherent, "check", "Check CC1 and CC2", o)->callback([&] {
    run = [&] {
      check(validate_coherent(coherent_from_json(read_json(o.input)),
                              ReportMode::kAll));
    };
  });
  command(*coherent, "build", "Rank table of a coherent complex", o, true)
      ->callback([&] {
        run = [&] {
          emit(matricube_from_coherent(coherent_from_json(read_json(o.input))),
               o);
        };
      });

  CLI::App* natural =
      app.add_subcommand("natural", "Natural polymatroid and matroid");
  natural->require_subcommand(1);
  command(*natural, "polymatroid", "Natural polymatroid of a matricube", o)
      ->callback([&] {
        run = [&] { emit(serialize(natural_polymatroid(matricube()))); };
      });
  command(*natural, "matroid",
          "Natural matroid of a matricube or of a polymatroid", o)
      ->callback([&] {
        run = [&] {
          Json j = read_json(o.input);
          Polymatroid p = j.is_object() && j.contains("ground")
                              ? polymatroid_from_json(j)
                              : natural_polymatroid(matricube_from_json(j));
          emit(serialize(natural_matroid(p)));
        };
      });

  command(app, "from-flags", "Matricube of a cubical matrix", o, true)
      ->callback([&] {
        run = [&] {
          emit(matricube_from_flags(cubical_matrix_from_json(read_json(o.input))),
               o);
        };
      });

  std::string width;
  int r = 0;
  std::uint64_t p = 0, seed = 0;
  CLI::App* gp = app.add_subcommand(
      "general-position", "Random flags with uniform entries in GF(p)");
  gp->add_option("--width", width, "Width r1,...,rd")->required();
  gp->add_option("--r", r, "Ambient dimension")->required();
  gp->add_option("--p", p, "Prime")->required();
  gp->add_option("--seed", seed, "Generator seed")->required();
  gp->callback([&] {
    run = [&] {
      emit(serialize(
          general_position_flags(Width(parse_int_list(width)), r, p, seed)));
    };
  });

  CLI::App* perm = app.add_subcommand("perm", "Permutation arrays");
  perm->require_subcommand(1);
  command(*perm, "to", "Matricube of a permutation array", o, true)
      ->callback([&] {
        run = [&] {
          emit(matricube_from_permarray(dot_array_from_json(read_json(o.input))),
               o);
        };
      });
  command(*perm, "from", "Permutation array of a matricube", o)->callback([&] {
    run = [&] { emit(serialize(permarray_from_matricube(matricube()))); };
  });

  command(app, "union-flag-matroids",
          "Matricube of a list of flag matroids on one ground set", o, true)
      ->callback([&] {
        run = [&] {
          Json j = read_json(o.input);
          if (!j.is_array()) {
            throw InvalidInput("expected an array of flag matroids");
          }
          std::vector<FlagMatroid> fms;
          for (const Json& f : j) fms.push_back(flag_matroid_from_json(f));
          emit(matricube_from_flag_matroids(fms), o);
        };
      });

  bool simple = false, bruteforce = false;
  std::optional<int> rank;
  CLI::App* en =
      app.add_subcommand("enumerate", "All matricubes of a width, one per line");
  en->add_option("--width", width, "Width r1,...,rd")->required();
  en->add_flag("--simple", simple, "Only simple matricubes");
  en->add_option("--rank", rank, "Only this rank");
  en->add_flag("--bruteforce", bruteforce, "Use the exhaustive filter");
  en->callback([&] {
    run = [&] {
      Width w(parse_int_list(width));
      EnumerateOptions opts{simple, rank};
      if (bruteforce) {
        for (const Matricube& m : bruteforce_matricubes(w, opts)) emit(serialize(m));
      } else {
        for_each_matricube(w, opts,
                           [](const Matricube& m) { emit(serialize(m)); });
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    run();
  } catch (const CheckFailed&) {
    return kExitFailure;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  std::cout.flush();
  return 0;
}
