#include <algorithm>
#include <cctype>
#include <charconv>
#include <regex>
#include <set>

#include "bub/binom.hpp"
#include "bub/cli.hpp"

namespace bub::cli {

namespace {

Error syntax(int line, int column, const std::string& msg) {
  return Error(ErrorKind::SyntaxError, msg, SourcePos{line, column});
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Whitespace-separated words of a line with their 1-based columns.
struct Word {
  std::string text;
  int column;
};

std::vector<Word> words(std::string_view line) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_blank(line[j])) ++j;
    out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

int parse_int(const Word& w, int line, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(w.text.data(), w.text.data() + w.text.size(), v);
  if (ec != std::errc() || p != w.text.data() + w.text.size())
    throw syntax(line, w.column, std::string("expected ") + what + ", found '" + w.text + "'");
  return v;
}

int parse_int(const Located& v, const char* what) {
  return parse_int(Word{v.text, v.pos.column}, v.pos.line, what);
}

std::string trim(std::string_view s, int& column) {
  std::size_t a = 0, b = s.size();
  while (a < b && is_blank(s[a])) ++a;
  while (b > a && is_blank(s[b - 1])) --b;
  column += static_cast<int>(a);
  return std::string(s.substr(a, b - a));
}

CoefficientDomain parse_domain(const Word& w, int line) {
  if (w.text == "F2") return CoefficientDomain::f2();
  if (w.text == "Z") return CoefficientDomain::integers();
  if (w.text.size() > 1 && w.text[0] == 'F') {
    const int p = parse_int(Word{w.text.substr(1), w.column + 1}, line, "a prime");
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
      throw Error(ErrorKind::NonPrimeModulus, w.text + ": " + std::to_string(p) + " is not prime",
                  SourcePos{line, w.column});
    return CoefficientDomain::fp(static_cast<std::uint32_t>(p));
  }
  throw syntax(line, w.column, "unknown coefficient domain '" + w.text + "' (F2, F<p> or Z)");
}

// Ring block collected line by line, built when the block closes.
struct PendingRing {
  std::string name;
  CoefficientDomain dom = CoefficientDomain::f2();
  std::optional<int> top;
  int line = 0;
  std::vector<Generator> gens;
  std::vector<int> gen_lines;
  std::vector<RelationSpec> rels;
  std::vector<SourcePos> rel_pos;  // position of the replacement expression
};

bool about_generator(ErrorKind k) {
  return k == ErrorKind::DuplicateGenerator || k == ErrorKind::OddDegreeOverOddP || k == ErrorKind::SyntaxError ||
         k == ErrorKind::InvariantViolation;
}

RingPtr build(const PendingRing& p) {
  try {
    return make_ring(p.dom, p.gens, p.rels, p.top);
  } catch (const Error& e) {
    if (!e.item()) throw e.at(SourcePos{p.line, 1});
    const std::size_t i = *e.item();
    if (about_generator(e.kind()) && i < p.gen_lines.size()) throw e.at(SourcePos{p.gen_lines[i], 1});
    if (i < p.rel_pos.size()) {
      const SourcePos at = p.rel_pos[i];
      const int col = e.position() && e.position()->column > 0 ? at.column + e.position()->column - 1 : at.column;
      throw e.at(SourcePos{at.line, col});
    }
    throw e.at(SourcePos{p.line, 1});
  }
}

const std::map<std::string, std::pair<std::set<std::string>, std::set<std::string>>>& scenario_keys() {
  // kind -> (required, optional)
  static const std::map<std::string, std::pair<std::set<std::string>, std::set<std::string>>> keys{
      {"stiefel", {{"b", "e", "k", "xi"}, {"c"}}},
      {"main", {{"eta", "xi"}, {"zetas", "b"}}},
      {"check-ms", {{"r", "eta"}, {}}},
      {"check-mpss", {{"eta", "mus"}, {}}},
      {"check-two", {{"eta"}, {}}},
      {"check-u2", {{"eta"}, {}}},
      {"fiber-k", {{"kind", "args"}, {"n", "d"}}},
  };
  return keys;
}

std::vector<Located> split_list(const Located& v, char sep) {
  std::vector<Located> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = v.text.find(sep, start);
    const std::string_view piece =
        std::string_view(v.text).substr(start, end == std::string::npos ? std::string::npos : end - start);
    int col = v.pos.column + static_cast<int>(start);
    std::string t = trim(piece, col);
    out.push_back({std::move(t), SourcePos{v.pos.line, col}});
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  Problem prob;
  std::optional<PendingRing> open;
  std::string last_ring;
  bool have_mode = false, have_scenario = false;

  auto close_ring = [&] {
    if (!open) return;
    prob.rings[open->name] = build(*open);
    last_ring = open->name;
    open.reset();
  };

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto ws = words(raw);
    if (ws.empty()) continue;
    const bool indented = is_blank(raw[0]);
    const std::string& head = ws[0].text;

    if (head == "gen" || head == "rel") {
      if (!open || !indented)
        throw syntax(lineno, ws[0].column, "'" + head + "' must be indented under a ring declaration");
      if (head == "gen") {
        if (ws.size() != 4 || ws[2].text != "deg") throw syntax(lineno, ws[0].column, "expected 'gen <name> deg <k>'");
        if (!is_identifier(ws[1].text)) throw syntax(lineno, ws[1].column, "invalid generator name '" + ws[1].text + "'");
        open->gens.push_back({ws[1].text, parse_int(ws[3], lineno, "a degree")});
        open->gen_lines.push_back(lineno);
      } else {
        static const std::regex rel_re(R"(^\s*rel\s+([A-Za-z_][A-Za-z0-9_]*)\s*\^\s*([0-9]+)\s*=\s*)");
        std::match_results<std::string_view::const_iterator> m;
        if (!std::regex_search(raw.begin(), raw.end(), m, rel_re))
          throw syntax(lineno, ws[0].column, "expected 'rel <gen>^<e> = <expr>'");
        const auto rhs_start = static_cast<std::size_t>(m.length(0));
        int col = static_cast<int>(rhs_start) + 1;
        const std::string rhs = trim(raw.substr(rhs_start), col);
        if (rhs.empty()) throw syntax(lineno, col, "missing replacement expression");
        const int e = std::stoi(m[2].str());
        if (e < 1) throw syntax(lineno, static_cast<int>(m.position(2)) + 1, "exponent must be positive");
        Expr expr = Expr::number(0);
        try {
          expr = parse_expr(rhs);
        } catch (const Error& err) {
          throw err.at(SourcePos{lineno, col + (err.position() ? err.position()->column : 1) - 1});
        }
        open->rels.push_back({m[1].str(), static_cast<std::uint32_t>(e), expr});
        open->rel_pos.push_back(SourcePos{lineno, col});
      }
      continue;
    }
    if (indented && open) throw syntax(lineno, ws[0].column, "unexpected '" + head + "' inside ring block");
    close_ring();

    if (head == "mode") {
      if (have_mode) throw syntax(lineno, ws[0].column, "mode declared twice");
      have_mode = true;
      if (ws.size() == 2 && ws[1].text == "real") {
        prob.mode = Mode::Real;
      } else if (ws.size() == 3 && ws[1].text == "complex" && ws[2].text.rfind("p=", 0) == 0) {
        prob.mode = Mode::Complex;
        const int p = parse_int(Word{ws[2].text.substr(2), ws[2].column + 2}, lineno, "a prime");
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
          throw Error(ErrorKind::NonPrimeModulus, std::to_string(p) + " is not prime", SourcePos{lineno, ws[2].column});
        prob.prime = static_cast<std::uint32_t>(p);
      } else {
        throw syntax(lineno, ws[0].column, "expected 'mode real' or 'mode complex p=<prime>'");
      }
    } else if (head == "ring") {
      if (ws.size() != 4 && !(ws.size() == 6 && ws[4].text == "topdegree"))
        throw syntax(lineno, ws[0].column, "expected 'ring <name> over F2|F<p>|Z [topdegree <d>]'");
      if (ws[2].text != "over") throw syntax(lineno, ws[2].column, "expected 'over'");
      if (!is_identifier(ws[1].text)) throw syntax(lineno, ws[1].column, "invalid ring name '" + ws[1].text + "'");
      if (prob.rings.count(ws[1].text))
        throw syntax(lineno, ws[1].column, "ring '" + ws[1].text + "' declared twice");
      PendingRing r;
      r.name = ws[1].text;
      r.dom = parse_domain(ws[3], lineno);
      r.line = lineno;
      if (ws.size() == 6) r.top = parse_int(ws[5], lineno, "a top degree");
      open = std::move(r);
    } else if (head == "bundle") {
      if (ws.size() < 4 || ws[2].text != "dim")
        throw syntax(lineno, ws[0].column, "expected 'bundle <name> dim <n> [over <ring>] [classes ...]'");
      BundleDecl b;
      b.name = ws[1].text;
      b.line = lineno;
      if (!is_identifier(b.name)) throw syntax(lineno, ws[1].column, "invalid bundle name '" + b.name + "'");
      if (prob.bundles.count(b.name)) throw syntax(lineno, ws[1].column, "bundle '" + b.name + "' declared twice");
      b.dimension = parse_int(ws[3], lineno, "a dimension");
      if (b.dimension < 0) throw syntax(lineno, ws[3].column, "dimension must be non-negative");
      std::size_t next = 4;
      b.ring = last_ring;
      if (ws.size() > next && ws[next].text == "over") {
        if (ws.size() == next + 1) throw syntax(lineno, ws[next].column, "missing ring name");
        b.ring = ws[next + 1].text;
        if (!prob.rings.count(b.ring))
          throw Error(ErrorKind::UndeclaredName, "ring '" + b.ring + "' is not declared",
                      SourcePos{lineno, ws[next + 1].column});
        next += 2;
      }
      if (b.ring.empty()) throw Error(ErrorKind::UndeclaredName, "no ring declared before bundle", SourcePos{lineno, 1});
      if (ws.size() > next) {
        if (ws[next].text != "classes") throw syntax(lineno, ws[next].column, "expected 'classes'");
        const auto start = static_cast<std::size_t>(ws[next].column - 1) + ws[next].text.size();
        const Located rest{std::string(raw.substr(start)), SourcePos{lineno, static_cast<int>(start) + 1}};
        b.classes = split_list(rest, ';');
        if (b.classes.size() > static_cast<std::size_t>(b.dimension))
          throw syntax(lineno, b.classes[static_cast<std::size_t>(b.dimension)].pos.column,
                       "more classes than the dimension " + std::to_string(b.dimension));
        for (const auto& c : b.classes)
          if (c.text.empty()) throw syntax(lineno, c.pos.column, "empty class expression");
      }
      prob.bundles[b.name] = std::move(b);
    } else if (head == "scenario") {
      if (have_scenario) throw syntax(lineno, ws[0].column, "only one scenario per file");
      have_scenario = true;
      if (ws.size() < 2) throw syntax(lineno, ws[0].column, "missing scenario kind");
      const auto& keys = scenario_keys();
      auto kit = keys.find(ws[1].text);
      if (kit == keys.end()) throw syntax(lineno, ws[1].column, "unknown scenario '" + ws[1].text + "'");
      ScenarioDecl sc;
      sc.kind = ws[1].text;
      sc.line = lineno;
      const auto start = static_cast<std::size_t>(ws[1].column - 1) + ws[1].text.size();
      const std::string rest(raw.substr(start));
      static const std::regex key_re(R"((?:^|\s)([a-z]+)=)");
      std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> found;  // key, (key col, value start)
      for (auto it = std::sregex_iterator(rest.begin(), rest.end(), key_re); it != std::sregex_iterator(); ++it)
        found.push_back({(*it)[1].str(), {static_cast<std::size_t>(it->position(1)),
                                          static_cast<std::size_t>(it->position(0) + it->length(0))}});
      {
        int col = static_cast<int>(start) + 1;
        const std::string lead = trim(std::string_view(rest).substr(0, found.empty() ? rest.size() : found[0].second.first), col);
        if (!lead.empty()) throw syntax(lineno, col, "expected key=value, found '" + lead + "'");
      }
      for (std::size_t i = 0; i < found.size(); ++i) {
        const auto& [key, where] = found[i];
        const int key_col = static_cast<int>(start + where.first) + 1;
        if (!kit->second.first.count(key) && !kit->second.second.count(key))
          throw syntax(lineno, key_col, "unknown key '" + key + "' for scenario " + sc.kind);
        if (sc.values.count(key)) throw syntax(lineno, key_col, "key '" + key + "' given twice");
        const std::size_t vend = i + 1 < found.size() ? found[i + 1].second.first : rest.size();
        int col = static_cast<int>(start + where.second) + 1;
        std::string v = trim(std::string_view(rest).substr(where.second, vend - where.second), col);
        if (v.empty()) throw syntax(lineno, col, "empty value for '" + key + "'");
        sc.values[key] = Located{std::move(v), SourcePos{lineno, col}};
      }
      for (const auto& req : kit->second.first)
        if (!sc.values.count(req)) throw syntax(lineno, ws[1].column, "scenario " + sc.kind + " needs '" + req + "='");
      prob.scenario = std::move(sc);
    } else if (head == "assume") {
      if (ws.size() != 2 || ws[1].text != "leray-hirsch")
        throw syntax(lineno, ws[0].column, "expected 'assume leray-hirsch'");
      prob.leray_hirsch = true;
    } else {
      throw syntax(lineno, ws[0].column, "unknown statement '" + head + "'");
    }
  }
  close_ring();
  if (!have_scenario) throw syntax(lineno, 1, "no scenario declared");

  // Coefficients must fit the mode.
  for (const auto& [name, ring] : prob.rings) {
    const auto& dom = ring->coeffs();
    const bool ok = prob.mode == Mode::Real ? dom.kind() == CoeffKind::F2
                                            : dom.kind() == CoeffKind::Integers || dom.characteristic() == *prob.prime;
    if (!ok)
      throw Error(ErrorKind::InvariantViolation,
                  "ring '" + name + "' over " + dom.name() + " does not match mode " + to_string(prob.mode) +
                      (prob.prime ? " p=" + std::to_string(*prob.prime) : std::string()));
  }

  // Bundle references in the scenario.
  const auto& sc = prob.scenario;
  for (const char* key : {"xi", "eta"})
    if (auto it = sc.values.find(key); it != sc.values.end() && !prob.bundles.count(it->second.text))
      throw Error(ErrorKind::UndeclaredName, "bundle '" + it->second.text + "' is not declared", it->second.pos);
  for (const char* key : {"zetas", "mus"})
    if (auto it = sc.values.find(key); it != sc.values.end())
      for (const auto& item : split_list(it->second, ','))
        if (!prob.bundles.count(item.text))
          throw Error(ErrorKind::UndeclaredName, "bundle '" + item.text + "' is not declared", item.pos);
  return prob;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

RingElement evaluate(const Located& v, const RingPtr& ring) {
  try {
    return normalize(parse_expr(v.text), ring);
  } catch (const Error& e) {
    const int inner = e.position() && e.position()->column > 0 ? e.position()->column : 1;
    throw e.at(SourcePos{v.pos.line, v.pos.column + inner - 1});
  }
}

ClassList resolve(const Problem& prob, const BundleDecl& b, const RingPtr& ring) {
  std::vector<RingElement> higher;
  for (int i = 0; i < b.dimension; ++i) {
    if (static_cast<std::size_t>(i) < b.classes.size())
      higher.push_back(evaluate(b.classes[static_cast<std::size_t>(i)], ring));
    else
      higher.push_back(RingElement::zero(ring));
  }
  try {
    return ClassList(ring, prob.mode, std::move(higher));
  } catch (const Error& e) {
    if (e.item() && *e.item() < b.classes.size()) throw e.at(b.classes[*e.item()].pos);
    throw e.at(SourcePos{b.line, 1});
  }
}

const BundleDecl& bundle(const Problem& prob, const std::string& key) {
  return prob.bundles.at(prob.scenario.values.at(key).text);
}

ClassList resolve_key(const Problem& prob, const std::string& key) {
  const BundleDecl& b = bundle(prob, key);
  return resolve(prob, b, prob.rings.at(b.ring));
}

void same_ring(const Problem& prob, const std::string& a, const std::string& b) {
  const auto& ra = bundle(prob, a).ring;
  const auto& rb = bundle(prob, b).ring;
  if (ra != rb)
    throw Error(ErrorKind::MixedRings, a + " is over '" + ra + "' but " + b + " is over '" + rb + "'",
                prob.scenario.values.at(b).pos);
}

BoundReport run_fiber_k(const Problem& prob) {
  const auto& vals = prob.scenario.values;
  const Located& kind = vals.at("kind");
  std::vector<int> args;
  for (const auto& a : split_list(vals.at("args"), ',')) args.push_back(parse_int(a, "an integer argument"));
  BoundReport rep;
  rep.scenario = "fiber-k";
  rep.mode = prob.mode;
  rep.prime = prob.prime;
  std::optional<int> k;
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi)
      throw syntax(vals.at("args").pos.line, vals.at("args").pos.column,
                   "kind=" + kind.text + " takes " + std::to_string(lo) +
                       (hi != lo ? "-" + std::to_string(hi) : std::string()) + " arguments");
  };
  try {
    if (kind.text == "projstiefel") {
      need(2, 2);
      const std::uint32_t p = prob.mode == Mode::Real ? 2 : *prob.prime;
      rep.prime = p;
      rep.theorem = "fiber-k-projstiefel";
      rep.dims = {{"r", args[0]}, {"s", args[1]}};
      k = fiber_k_proj_stiefel(args[0], args[1], p, prob.mode);
      if (k) rep.add("binom(r+s, k+1) != 0 mod " + std::to_string(p), true,
                     "binom(" + std::to_string(args[0] + args[1]) + "," + std::to_string(*k + 1) + ")");
    } else if (kind.text == "spheres") {
      need(1, 64);
      rep.theorem = "fiber-k-spheres";
      k = fiber_k_product_spheres(args);
      rep.dims["r"] = static_cast<long long>(args.size());
    } else if (kind.text == "walltype") {
      need(2, 2);
      rep.theorem = "fiber-k-walltype";
      rep.dims = {{"r", args[0]}, {"s", args[1]}};
      k = fiber_k_wall_type(args[0], args[1]);
      rep.notes.push_back("k = 2r+s is used for all r, s > 1; the underlying computation is documented for r = s");
    } else {
      throw syntax(kind.pos.line, kind.pos.column, "unknown kind '" + kind.text + "' (projstiefel, spheres, walltype)");
    }
  } catch (const Error& e) {
    if (e.position()) throw;
    throw e.at(vals.at("args").pos);
  }
  if (!k) {
    rep.fail("some k in [s, r+s) has binom(r+s, k+1) != 0", "NoValidK", "no bound via this example");
    return rep;
  }
  rep.dims["k"] = *k;
  if (vals.count("n") || vals.count("d")) {
    if (!vals.count("n") || !vals.count("d"))
      throw syntax(prob.scenario.line, 1, "fiber-k needs both n= and d= to produce a bound");
    const int n = parse_int(vals.at("n"), "n");
    const int d = parse_int(vals.at("d"), "d");
    rep.dims["n"] = n;
    rep.dims["d"] = d;
    if (*k < n) {
      rep.fail("k >= n", "KLessThanN", "k=" + std::to_string(*k) + ", n=" + std::to_string(n));
      return rep;
    }
    rep.add("k >= n", true, "k=" + std::to_string(*k) + ", n=" + std::to_string(n));
    rep.bound = stiefel_bound(prob.mode, d, *k, n);
    rep.notes.push_back("bound assumes b e(lambda)^k != 0 on the total space (fibrewise surjectivity declared, not checked)");
  }
  return rep;
}

}  // namespace

BoundReport run(const Problem& prob) {
  const auto& sc = prob.scenario;
  const auto& vals = sc.values;
  BoundReport rep;
  if (sc.kind == "stiefel") {
    const BundleDecl& xb = bundle(prob, "xi");
    const RingPtr ring = prob.rings.at(xb.ring);
    StiefelScenario inst{resolve(prob, xb, ring), evaluate(vals.at("e"), ring), evaluate(vals.at("b"), ring),
                         parse_int(vals.at("k"), "k"), std::nullopt, prob.leray_hirsch};
    if (vals.count("c")) inst.c = evaluate(vals.at("c"), ring);
    try {
      rep = certificate_stiefel(inst);
    } catch (const Error& e) {
      if (e.position()) throw;
      throw e.at(SourcePos{sc.line, 1});
    }
  } else if (sc.kind == "main") {
    same_ring(prob, "eta", "xi");
    const BundleDecl& eb = bundle(prob, "eta");
    MainScenario inst{resolve_key(prob, "eta"), resolve_key(prob, "xi"), {}, std::nullopt};
    if (vals.count("b")) inst.b = evaluate(vals.at("b"), prob.rings.at(eb.ring));
    if (vals.count("zetas")) {
      for (const auto& item : split_list(vals.at("zetas"), ',')) {
        const BundleDecl& zb = prob.bundles.at(item.text);
        if (zb.ring != eb.ring)
          throw Error(ErrorKind::MixedRings,
                      "zeta bundle '" + zb.name + "' must be declared over the base ring '" + eb.ring + "'", item.pos);
        ZetaSpec z;
        z.label = zb.name;
        z.classes = [&prob, &zb](const RingPtr& level) { return resolve(prob, zb, level); };
        inst.zetas.push_back(std::move(z));
      }
    }
    try {
      rep = certificate_main(inst);
    } catch (const Error& e) {
      if (e.position()) throw;
      throw e.at(SourcePos{sc.line, 1});
    }
  } else if (sc.kind == "fiber-k") {
    return run_fiber_k(prob);
  } else {
    const ClassList eta = resolve_key(prob, "eta");
    CheckResult chk;
    try {
      if (sc.kind == "check-ms") {
        chk = check_ms(eta.dimension(), parse_int(vals.at("r"), "r"), eta);
      } else if (sc.kind == "check-mpss") {
        std::vector<ClassList> mus;
        for (const auto& item : split_list(vals.at("mus"), ',')) {
          const BundleDecl& mb = prob.bundles.at(item.text);
          if (mb.ring != bundle(prob, "eta").ring)
            throw Error(ErrorKind::MixedRings, "bundle '" + mb.name + "' is not over the ring of eta", item.pos);
          mus.push_back(resolve(prob, mb, prob.rings.at(mb.ring)));
        }
        chk = check_mpss(eta, mus);
      } else if (sc.kind == "check-two") {
        chk = check_two(eta);
      } else {
        chk = check_u2(eta);
      }
    } catch (const Error& e) {
      if (e.position()) throw;
      throw e.at(SourcePos{sc.line, 1});
    }
    rep = to_report(chk, prob.mode);
  }
  if (prob.mode == Mode::Complex) rep.prime = prob.prime;
  return rep;
}

int exit_code(const BoundReport& report) { return report.failure ? kExitHypotheses : kExitBound; }

}  // namespace bub::cli
