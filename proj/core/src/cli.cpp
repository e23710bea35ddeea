#include "hibi/cli.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hibi/cas_export.hpp"
#include "hibi/errors.hpp"
#include "hibi/hilbert.hpp"
#include "hibi/lattice.hpp"
#include "hibi/planar.hpp"
#include "hibi/poset.hpp"
#include "hibi/regularity.hpp"

namespace hibi {

namespace {

int parse_count(const std::string& s) {
  size_t pos = 0;
  int n = 0;
  try {
    n = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("malformed builtin parameter: " + s);
  }
  if (pos != s.size() || n < 1)
    throw ParseError("malformed builtin parameter: " + s);
  return n;
}

}  // namespace

std::string builtin_poset_text(const std::string& name) {
  if (name == "example-strict-bounds")
    return "p1<p4\np2<p4\np2<p5\np3<p5\n";
  std::istringstream in(name);
  std::string kind, arg;
  in >> kind >> arg;
  std::string rest;
  if (in >> rest || arg.empty())
    throw ParseError("unknown builtin: " + name);
  if (kind == "chain") return to_input_text(chain_poset(parse_count(arg)));
  if (kind == "antichain" || kind == "boolean")
    return to_input_text(antichain_poset(parse_count(arg)));
  if (kind == "grid") {
    size_t x = arg.find('x');
    if (x == std::string::npos || x == 0 || x + 1 == arg.size())
      throw ParseError("grid builtin expects AxB, got: " + arg);
    int a = parse_count(arg.substr(0, x));
    int b = parse_count(arg.substr(x + 1));
    return to_input_text(disjoint_union(chain_poset(a - 1, "r"),
                                        chain_poset(b - 1, "c")));
  }
  if (kind == "cyclic") {
    int r = parse_count(arg);
    return to_input_text(cyclic_poset(r, std::vector<int>(r - 1, 1)));
  }
  throw ParseError("unknown builtin: " + name);
}

namespace {

std::string load_input(const Invocation& inv, const std::string& stdin_text) {
  if (!inv.builtin.empty()) return builtin_poset_text(inv.builtin);
  if (inv.input_path.empty())
    throw ParseError("no input: pass a poset file or a builtin name");
  if (inv.input_path == "-") return stdin_text;
  std::ifstream in(inv.input_path);
  if (!in) throw ParseError("cannot read input file: " + inv.input_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string input_stem(const Invocation& inv) {
  std::string raw = !inv.builtin.empty()
                        ? inv.builtin
                        : (inv.input_path == "-" || inv.input_path.empty())
                              ? "stdin"
                              : std::filesystem::path(inv.input_path)
                                    .stem()
                                    .string();
  std::string stem;
  for (char c : raw)
    stem += std::isalnum(static_cast<unsigned char>(c))
                ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
                : '-';
  return stem.empty() ? "lattice" : stem;
}

void cmd_reg(const DistLattice& L, const Invocation& inv, const Budget& budget,
             CmdResult& res) {
  RegularityReport rep = regularity(L, budget);
  if (inv.format == "records") {
    res.out = rep.records();
  } else {
    res.out = rep.str();
    if (!rep.value)
      res.out +=
          "note: enumeration budget exhausted; the value is bracketed, not "
          "exact\n";
  }
}

void cmd_hvector(const Poset& p, const DistLattice& L, const Invocation& inv,
                 const Budget& budget, CmdResult& res) {
  FlagBeta fb = flag_beta(p, budget);
  HVector h1 = h_from_beta(fb);
  HVector h2 = h_from_f(f_vector(L));
  bool agree = h1 == h2;
  std::ostringstream out;
  if (inv.format == "records") {
    out << "h: " << h1.str() << "\n";
    out << "deg: " << regularity_from_h(h1) << "\n";
    out << "paths-agree: " << (agree ? "true" : "false") << "\n";
    if (!agree) out << "h-from-f: " << h2.str() << "\n";
    out << "extensions: " << fb.total() << "\n";
    out << fb.records();
  } else {
    if (agree) {
      out << "h: " << h1.str() << " (both paths agree)\n";
    } else {
      out << "h mismatch: extensions give " << h1.str()
          << "; the f-transform gives " << h2.str() << "\n";
    }
    out << "deg h: " << regularity_from_h(h1) << "\n";
    out << "extensions: " << fb.total() << "\n";
  }
  res.out = out.str();
  res.exit_code = agree ? 0 : 1;
}

void cmd_verify(const Poset& p, const DistLattice& L, const Invocation& inv,
                const Budget& budget, CmdResult& res) {
  EmbedResult er = try_embed(L);
  std::ostringstream out;
  bool records = inv.format == "records";
  if (!er.planar()) {
    auto [lo, hi] = nonplanar_bounds(p);
    std::string names;
    for (int v : er.witness) names += (names.empty() ? "" : ",") + p.name(v);
    if (records) {
      out << "planar: false\n";
      out << "witness: " << names << "\n";
      out << "lower: " << lo << "\n";
      out << "upper: " << hi << "\n";
    } else {
      out << "not planar; witness antichain {" << names << "}; bounds ("
          << lo << ", " << hi << ")\n";
    }
    res.out = out.str();
    return;
  }

  const PlanarEmbedding& emb = *er.embedding;
  EdgeLabeling lam = build_labeling(L, emb);
  bool all_ok = true;

  ElVerdict el = verify_el(L, lam);
  all_ok = all_ok && el.ok;

  MaximalChain c0 = upper_chain(L, emb);
  BigInt free_chains = count_descent_free_chains(L, lam);
  bool unique_ok = free_chains == 1 && chain_descents(c0, L, lam).mask() == 0 &&
                   straighten(c0, L, lam, emb) == c0;
  all_ok = all_ok && unique_ok;

  int squares = max_cyclic_squares(L, emb).value;
  int descents = max_descent_cardinality(L, lam).value;
  int degh = regularity_from_h(h_from_beta(flag_beta(p, budget)));
  bool three_ok = squares == descents && descents == degh;
  all_ok = all_ok && three_ok;

  if (records) {
    out << "planar: true\n";
    out << "el-property: " << (el.ok ? "pass" : "fail") << "\n";
    if (!el.ok)
      out << "el-counterexample: [" << L.element_name(el.x) << ", "
          << L.element_name(el.y) << "] " << el.detail << "\n";
    out << "unique-increasing-chain: " << (unique_ok ? "pass" : "fail")
        << "\n";
    out << "squares: " << squares << "\n";
    out << "descents: " << descents << "\n";
    out << "deg-h: " << degh << "\n";
    out << "three-way: " << (three_ok ? "pass" : "fail") << "\n";
  } else {
    out << "planar: yes\n";
    out << "check el-property: " << (el.ok ? "pass" : "fail") << "\n";
    if (!el.ok)
      out << "  counterexample interval [" << L.element_name(el.x) << ", "
          << L.element_name(el.y) << "]: " << el.detail << "\n";
    out << "check unique increasing chain: " << (unique_ok ? "pass" : "fail")
        << "\n";
    out << "check three-way regularity: "
        << (three_ok ? "pass" : "fail") << " (squares " << squares
        << ", descents " << descents << ", deg h " << degh << ")\n";
  }
  res.out = out.str();
  res.exit_code = all_ok ? 0 : 1;
}

void cmd_export(const DistLattice& L, const Invocation& inv, CmdResult& res) {
  Dialect dialect = parse_dialect(inv.dialect);
  std::string script = export_cas_script(L, dialect);
  EmbedResult er = try_embed(L);
  std::string graph;
  if (er.planar()) {
    EdgeLabeling lam = build_labeling(L, *er.embedding);
    graph = export_hasse_graph(L, &*er.embedding, &lam);
  } else {
    graph = export_hasse_graph(L);
  }

  std::string stem =
      input_stem(inv) + "-" + content_hash(L.serialize()).substr(0, 12);
  std::string script_ext =
      dialect == Dialect::Macaulay2 ? ".m2" : ".cas.txt";
  std::filesystem::path dir(inv.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto write = [&](const std::string& name, const std::string& data) {
    std::filesystem::path path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << data) || !out.flush())
      throw std::runtime_error("cannot write output file: " + path.string());
    res.files_written.push_back(path.string());
    res.out += "wrote: " + path.string() + "\n";
  };
  write(stem + script_ext, script);
  write(stem + ".gv", graph);
}

void cmd_sweep(const Invocation& inv, const Budget& budget, CmdResult& res) {
  if (inv.size < 1 || inv.size > 7)
    throw std::invalid_argument("sweep size must be between 1 and 7");
  SweepResult sr = sweep_corpus(inv.size, budget);
  res.out = inv.format == "records" ? sr.records() : sr.table();
  res.exit_code = sr.ok() ? 0 : 1;
}

}  // namespace

CmdResult run_command(const Invocation& inv, const std::string& stdin_text) {
  CmdResult res;
  try {
    if (inv.format != "text" && inv.format != "records")
      throw std::invalid_argument("unknown format: " + inv.format);
    Budget budget;
    budget.max_extensions = inv.budget;

    if (inv.command == "sweep") {
      cmd_sweep(inv, budget, res);
      return res;
    }

    Poset p = parse_poset(load_input(inv, stdin_text));
    DistLattice L = DistLattice::birkhoff(p, budget);
    if (inv.command == "reg")
      cmd_reg(L, inv, budget, res);
    else if (inv.command == "hvector")
      cmd_hvector(p, L, inv, budget, res);
    else if (inv.command == "verify")
      cmd_verify(p, L, inv, budget, res);
    else if (inv.command == "export")
      cmd_export(L, inv, res);
    else
      throw std::invalid_argument("unknown command: " + inv.command);
  } catch (const ParseError& e) {
    res.exit_code = 2;
    res.out = std::string("error: ") + e.what() + "\n";
  } catch (const CapError& e) {
    res.exit_code = 2;
    res.out = std::string("error: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    res.exit_code = 2;
    res.out = std::string("error: ") + e.what() + "\n";
  } catch (const std::runtime_error& e) {
    res.exit_code = 2;
    res.out = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace hibi
