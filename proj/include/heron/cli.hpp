#pragma once

// Command-line front end. run() takes the arguments after the program name
// and returns the process exit code:
//   0 success, 1 domain error, 2 usage error, 3 budget exhausted.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heron/exhaustive.hpp"
#include "heron/io.hpp"

namespace heron::cli {

namespace detail {

enum class Format { text, records };

struct Common {
  std::string format = "text";
  Format fmt() const { return format == "records" ? Format::records : Format::text; }
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "records"}));
}

inline VertexPerm parse_perm(const std::string& s) {
  const auto p = VertexPerm::parse(s);
  if (!p) throw UsageError("bad permutation '" + s + "' (expected four distinct letters from PQRS)");
  return *p;
}

inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("HERON_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw UsageError("HERON_BUDGET must be a nonnegative integer");
    return v;
  }
  return 0;
}

class Input {
 public:
  Input(const std::string& path, std::istream& fallback) : stream_(&fallback) {
    if (path == "-") return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open '" + path + "'");
    stream_ = &file_;
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_;
};

template <std::size_t Dim>
void write_family(std::ostream& out, Format fmt, const std::vector<Length>& edges, const EmbeddingFamily<Dim>& f,
                  Strength which) {
  const auto& forms = which == Strength::strong ? f.strong : f.weak;
  if (fmt == Format::records) {
    for (const auto& c : forms) out << to_record_line({edges, std::nullopt, {}, to_quats(c.vertices), which}) << '\n';
    return;
  }
  out << "# strong " << f.strong.size() << " weak " << f.weak.size() << '\n';
  for (std::size_t i = 0; i < forms.size(); ++i) {
    out << "# " << strength_name(which) << ' ' << i + 1 << '\n';
    write_vertices(out, to_quats(forms[i].vertices));
  }
}

inline void write_embedding(std::ostream& out, Format fmt, const std::vector<Length>& edges,
                            const std::optional<VertexPerm>& perm, const std::vector<Quat>& rotors,
                            const std::vector<Quat>& vertices, std::optional<Strength> strength) {
  if (fmt == Format::records) {
    out << to_record_line({edges, perm, rotors, vertices, strength}) << '\n';
    return;
  }
  for (const Quat& x : rotors) out << "# rotor " << x << '\n';
  write_vertices(out, vertices);
}

inline std::optional<Strength> parse_canon(const std::string& s) {
  if (s == "weak") return Strength::weak;
  if (s == "strong") return Strength::strong;
  return std::nullopt;
}

template <std::size_t Dim>
std::vector<Quat> canonicalize(const PointSet<Dim>& pts, Strength s) {
  return to_quats((s == Strength::weak ? weak_canonical(pts) : strong_canonical(pts)).vertices);
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Lattice embedding of Heronian triangles and tetrahedra"};
  app.require_subcommand(1);
  app.name("heron");
  Common common;

  std::string edges_text, perm_text = "PQRS", canon = "none", rotor_rule = "euclid", strength = "strong";
  std::string via = "gauss", file = "-", kind, squared_text, checkpoint;
  bool mirror = false, primitive_only = false;
  std::int64_t w = 0, bound = 0, max_diameter = 0;
  std::uint64_t budget = 0, limit = 0;
  int dim = 3;
  unsigned jobs = 1;

  const std::string edges_help = "Edge lengths, sequential order QP,RP,RQ[,SP,SQ,SR]";
  auto* pose = app.add_subcommand("pose", "Rational axial pose");
  pose->add_option("--edges", edges_text, edges_help)->required();
  pose->add_option("--perm", perm_text, "Vertex relabelling, e.g. QRPS");
  pose->add_flag("--mirror", mirror, "Negate the altitude of S");

  auto* embed2 = app.add_subcommand("embed2", "Embed a triangle in Z^2");
  embed2->add_option("--edges", edges_text, "Edge lengths QP,RP,RQ")->required();
  embed2->add_option("--via", via, "Rotor arithmetic")->check(CLI::IsMember({"gauss", "quat"}));
  embed2->add_option("--canon", canon, "Canonical form")->check(CLI::IsMember({"none", "weak", "strong"}));

  auto* embed3 = app.add_subcommand("embed3", "Embed a tetrahedron in Z^3 by GCD rotation");
  embed3->add_option("--edges", edges_text, edges_help)->required();
  embed3->add_option("--perm", perm_text, "Vertex relabelling, e.g. QRPS");
  embed3->add_option("--canon", canon, "Canonical form")->check(CLI::IsMember({"none", "weak", "strong"}));
  embed3->add_option("--rotor", rotor_rule, "Rotor associate")->check(CLI::IsMember({"euclid", "canonical"}));

  auto* family = app.add_subcommand("family", "Distinct GCD embeddings over all 24 relabellings");
  family->add_option("--edges", edges_text, edges_help)->required();
  family->add_option("--strength", strength, "Which forms to list")->check(CLI::IsMember({"weak", "strong"}));
  family->add_option("--rotor", rotor_rule, "Rotor associate")->check(CLI::IsMember({"euclid", "canonical"}));

  auto* canon_cmd = app.add_subcommand("canon", "Canonical form of an embedding");
  canon_cmd->add_option("--file", file, "Embedding file, '-' for stdin");
  canon_cmd->add_option("--strength", strength, "weak or strong")->check(CLI::IsMember({"weak", "strong"}));
  canon_cmd->add_option("--dim", dim, "Lattice dimension")->check(CLI::IsMember({2, 3}));

  auto* search = app.add_subcommand("search", "Exhaustive embedding search");
  search->add_option("--edges", edges_text, edges_help)->required();
  search->add_option("--budget", budget, "Node budget (0 = unlimited; default HERON_BUDGET)");
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  search->add_option("--strength", strength, "Which forms to list")->check(CLI::IsMember({"weak", "strong"}));

  auto* z4 = app.add_subcommand("search-z4", "Bounded pentatope search in Z^4");
  z4->add_option("--squared-edges", squared_text, "Ten squared edges QP,RP,RQ,SP,SQ,SR,TP,TQ,TR,TS")->required();
  z4->add_option("--bound", bound, "Coordinate bound")->required()->check(CLI::NonNegativeNumber);

  auto* enumerate = app.add_subcommand("enumerate", "Heronian triangles or tetrahedra by diameter");
  enumerate->add_option("--kind", kind, "tri or tetra")->required()->check(
      CLI::IsMember({"tri", "triangle", "tetra", "tetrahedron"}));
  enumerate->add_option("--max", max_diameter, "Maximum diameter")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--primitive", primitive_only, "Primitive cases only");
  enumerate->add_option("--checkpoint", checkpoint, "Resume file holding the last emitted case");
  enumerate->add_option("--limit", limit, "Stop after this many cases (0 = no limit)");
  enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* verify = app.add_subcommand("verify", "Check an embedding against edge lengths");
  verify->add_option("--file", file, "Embedding file, '-' for stdin");
  verify->add_option("--edges", edges_text, edges_help)->required();

  auto* squares = app.add_subcommand("squares", "Solutions of x^2+y^2+z^2 = w^2");
  squares->add_option("--w", w, "w")->required()->check(CLI::PositiveNumber);

  for (auto* cmd : app.get_subcommands({})) add_format(cmd, common);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Format fmt = common.fmt();
  try {
    if (*pose) {
      const auto len = parse_lengths(edges_text);
      if (len.size() == 3) {
        const auto p = axial_pose_triangle(parse_triple(edges_text));
        write_embedding(out, fmt, p.edges, std::nullopt, {}, p.vertices, std::nullopt);
      } else {
        const auto p = axial_pose(parse_hexad(edges_text), parse_perm(perm_text), mirror ? -1 : 1);
        write_embedding(out, fmt, p.edges, p.permutation, {}, p.vertices, std::nullopt);
      }
    } else if (*embed2) {
      const EdgeTriple t = parse_triple(edges_text);
      const auto e = via == "gauss" ? embed_triangle_z2(t) : embed_triangle_via_z3(t);
      const auto s = parse_canon(canon);
      write_embedding(out, fmt, e.edges, std::nullopt, e.rotors,
                      s ? canonicalize(lattice_points2(e.vertices), *s) : e.vertices, s);
    } else if (*embed3) {
      const auto rule = rotor_rule == "euclid" ? RotorRule::euclid : RotorRule::canonical;
      const auto e = embed_tetra_z3(parse_hexad(edges_text), parse_perm(perm_text), rule);
      const auto s = parse_canon(canon);
      write_embedding(out, fmt, e.edges, e.permutation, e.rotors,
                      s ? canonicalize(lattice_points3(e.vertices), *s) : e.vertices, s);
    } else if (*family) {
      const EdgeHexad h = parse_hexad(edges_text);
      const auto rule = rotor_rule == "euclid" ? RotorRule::euclid : RotorRule::canonical;
      write_family(out, fmt, {h.e.begin(), h.e.end()}, gcd_embedding_family(h, rule), *parse_canon(strength));
    } else if (*canon_cmd) {
      Input input(file, in);
      const auto v = read_vertices(input.get());
      if (v.empty()) throw UsageError("no vertices in input");
      const Strength s = *parse_canon(strength);
      const auto c = dim == 2 ? canonicalize(lattice_points2(v), s) : canonicalize(lattice_points3(v), s);
      write_embedding(out, fmt, {}, std::nullopt, {}, c, s);
    } else if (*search) {
      if (search->count("--budget") == 0) budget = default_budget();
      const auto len = parse_lengths(edges_text);
      const Strength s = *parse_canon(strength);
      if (len.size() == 3) {
        const auto r = exhaustive_triangle_embeddings(parse_triple(edges_text));
        if (budget && r.nodes > budget) throw BudgetExhausted(r.nodes);
        if (fmt == Format::text) out << "# nodes " << r.nodes << '\n';
        write_family(out, fmt, len, r.family, s);
      } else {
        const auto r = exhaustive_embeddings(parse_hexad(edges_text), {budget, jobs});
        if (!r.complete) throw BudgetExhausted(r.nodes);
        if (fmt == Format::text) out << "# nodes " << r.nodes << '\n';
        write_family(out, fmt, len, r.family, s);
      }
    } else if (*z4) {
      const auto sq = parse_lengths(squared_text);
      if (sq.size() != 10) throw UsageError("pentatope needs ten squared edges");
      PentatopeSpec spec;
      for (int i = 0; i < 10; ++i) {
        if (sq[i] <= 0) throw UsageError("squared edges must be positive");
        spec.sq[i] = sq[i];
      }
      const auto found = search_z4(spec, bound);
      if (fmt == Format::text) out << "# embeddings " << found.size() << '\n';
      for (const auto& e : found) {
        if (fmt == Format::records) {
          nlohmann::ordered_json j;
          j["squared-edges"] = sq;
          for (const auto& p : e) j["vertices"].push_back({1, p[0], p[1], p[2], p[3]});
          out << j.dump() << '\n';
        } else {
          out << "#\n";
          for (const auto& p : e) out << "1," << p[0] << ',' << p[1] << ',' << p[2] << ',' << p[3] << '\n';
        }
      }
    } else if (*enumerate) {
      const bool tetra = kind == "tetra" || kind == "tetrahedron";
      std::optional<std::string> resume;
      if (!checkpoint.empty()) {
        std::ifstream cp(checkpoint);
        std::string line;
        if (cp && std::getline(cp, line) && !line.empty()) resume = line;
      }
      std::uint64_t emitted = 0;
      auto emit = [&](const auto& e) {
        const std::string text = format_lengths(e);
        if (fmt == Format::records)
          out << nlohmann::json{{"edges", e}}.dump() << '\n';
        else
          out << text << '\n';
        if (!checkpoint.empty()) {
          const std::string tmp = checkpoint + ".tmp";
          std::ofstream(tmp) << text << '\n';
          std::rename(tmp.c_str(), checkpoint.c_str());
        }
        return limit == 0 || ++emitted < limit;
      };
      if (tetra) {
        EnumerateOptions opt{max_diameter, primitive_only, std::nullopt};
        if (resume) opt.resume_after = parse_hexad(*resume);
        enumerate_heronian_tetrahedra(opt, [&](const EdgeHexad& h) { return emit(h.e); });
      } else {
        const std::optional<EdgeTriple> after = resume ? std::optional(parse_triple(*resume)) : std::nullopt;
        enumerate_heronian_triangles(max_diameter, primitive_only, [&](const EdgeTriple& t) {
          if (after && t <= *after) return true;
          return emit(t.e);
        });
      }
    } else if (*verify) {
      const auto len = parse_lengths(edges_text);
      if (len.size() != 3 && len.size() != 6) throw UsageError("need three or six edge lengths");
      Input input(file, in);
      auto v = read_vertices(input.get());
      const std::size_t n = len.size() == 3 ? 3 : 4;
      if (v.size() != n) throw DomainError("expected " + std::to_string(n) + " vertices, got " + std::to_string(v.size()));
      for (const Quat& x : v)
        if (x.s != 1) throw DomainError("vertex " + format_quat(x) + " is not a lattice point");
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      do {
        std::vector<Quat> relabelled;
        for (std::size_t i : order) relabelled.push_back(v[i]);
        if (!distances_match(relabelled, len)) continue;
        out << "ok";
        if (!std::is_sorted(order.begin(), order.end())) {
          out << " (vertex order";
          for (std::size_t i = 0; i < n; ++i) out << (i ? ',' : ' ') << order[i];
          out << ')';
        }
        out << '\n';
        return 0;
      } while (std::next_permutation(order.begin(), order.end()));
      err << "heron: distances do not match the edge lengths\n";
      return 1;
    } else if (*squares) {
      for (const auto& s : solve_three_squares(w)) {
        if (fmt == Format::records)
          out << nlohmann::json::array({s.x, s.y, s.z, s.w}).dump() << '\n';
        else
          out << s.x << ',' << s.y << ',' << s.z << ',' << s.w << '\n';
      }
    }
  } catch (const BudgetExhausted& e) {
    err << "heron: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    err << "heron: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "heron: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "heron: internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace heron::cli
