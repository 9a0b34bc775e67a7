// projstat: statistics, identity checks and bijections on G(r,p,s,n).

#include <cstdlib>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "projstat/bijections.hpp"
#include "projstat/identities.hpp"
#include "projstat/json_io.hpp"
#include "projstat/rsk.hpp"
#include "projstat/statistics.hpp"

namespace ps = projstat;

namespace {

constexpr int kExitMatch = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

enum class Format { Table, Json, Csv };

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoi(item, &used));
    } catch (const std::exception&) {
      throw ps::ParseError("expected an integer list", 0);
    }
    if (used != item.size()) throw ps::ParseError("expected an integer list", 0);
  }
  return out;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string paren(const std::vector<int>& v) { return "(" + join(v) + ")"; }

void print_json(const ps::Json& j) { std::cout << j.dump(2) << '\n'; }

ps::Json envelope(const std::string& command) {
  ps::Json out = ps::Json::object();
  out["schema"] = 1;
  out["command"] = command;
  return out;
}

// ---------------------------------------------------------------------------
// stats

struct StatsArgs {
  std::string group;
  std::string element;
  bool dist = false;
  Format format = Format::Table;
};

int cmd_stats(const StatsArgs& a) {
  const ps::GroupDescriptor group = ps::parse_group(a.group);
  if (!a.element.empty()) {
    const auto g = ps::parse_element(a.element, group);
    const auto rec = ps::stat_record(g);
    if (a.format == Format::Json) {
      auto out = envelope("stats");
      out["group"] = group.to_string();
      out["element"] = ps::format_element(g);
      out["stats"] = ps::to_json(rec);
      print_json(out);
      return kExitMatch;
    }
    if (a.format == Format::Csv) {
      std::cout << "element,des,fdes,fmaj,col,desG,maj,invAbs\n"
                << '"' << ps::format_element(g) << "\"," << rec.des << ',' << rec.fdes << ','
                << rec.fmaj << ',' << rec.col << ',' << rec.desG << ',' << rec.maj << ','
                << rec.invAbs << '\n';
      return kExitMatch;
    }
    std::cout << "group    " << group.to_string() << '\n'
              << "element  " << ps::format_element(g) << '\n'
              << "HDes     {" << join(rec.hdes) << "}\n"
              << "h        " << paren(rec.hvec) << '\n'
              << "k        " << paren(rec.kvec) << '\n'
              << "lambda   " << paren(rec.lambda) << '\n'
              << "des=" << rec.des << " fdes=" << rec.fdes << " col=" << rec.col
              << " fmaj=" << rec.fmaj << '\n'
              << "desG=" << rec.desG << " desA=" << rec.desA << " maj=" << rec.maj
              << " inv(|g|)=" << rec.invAbs << '\n';
    return kExitMatch;
  }

  const auto elements = ps::enumerate(group);
  if (a.dist) {
    std::map<std::array<int, 3>, long long> counts;
    for (const auto& g : elements) {
      const auto rec = ps::stat_record(g);
      ++counts[{rec.des, rec.fmaj, rec.col}];
    }
    if (a.format == Format::Json) {
      auto out = envelope("stats");
      out["group"] = group.to_string();
      out["order"] = elements.size();
      ps::Json rows = ps::Json::array();
      for (const auto& [key, c] : counts) {
        rows.push_back({{"des", key[0]}, {"fmaj", key[1]}, {"col", key[2]}, {"count", c}});
      }
      out["distribution"] = rows;
      print_json(out);
      return kExitMatch;
    }
    const char* sep = a.format == Format::Csv ? "," : " ";
    std::cout << "des" << sep << "fmaj" << sep << "col" << sep << "count\n";
    for (const auto& [key, c] : counts) {
      std::cout << key[0] << sep << key[1] << sep << key[2] << sep << c << '\n';
    }
    if (a.format == Format::Table) std::cout << "total " << elements.size() << '\n';
    return kExitMatch;
  }

  if (a.format == Format::Json) {
    auto out = envelope("stats");
    out["group"] = group.to_string();
    ps::Json rows = ps::Json::array();
    for (const auto& g : elements) {
      auto row = ps::to_json(ps::stat_record(g));
      row["element"] = ps::format_element(g);
      rows.push_back(row);
    }
    out["elements"] = rows;
    print_json(out);
    return kExitMatch;
  }
  const char* sep = a.format == Format::Csv ? "," : "\t";
  std::cout << "element" << sep << "des" << sep << "fdes" << sep << "fmaj" << sep << "col\n";
  for (const auto& g : elements) {
    const auto rec = ps::stat_record(g);
    const std::string w = ps::format_element(g);
    std::cout << (a.format == Format::Csv ? "\"" + w + "\"" : w) << sep << rec.des << sep
              << rec.fdes << sep << rec.fmaj << sep << rec.col << '\n';
  }
  return kExitMatch;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string identity;
  int r = 1, p = 1, s = 1, n = 1;
  int eps = 1, k = 0;
  std::optional<int> tmax, qmax, amax, umax, caps;
  int nmax = 3;
  std::string composition;
  int threads = 0;
  std::optional<std::uint64_t> budget;
  Format format = Format::Table;
};

ps::VerificationReport run_verify(const VerifyArgs& a) {
  ps::VerifyOptions opts;
  opts.threads = a.threads;
  if (a.budget) opts.budget = *a.budget;
  const int base = a.caps.value_or(6);
  ps::CarlitzCaps cc{a.tmax.value_or(base), a.qmax.value_or(base), a.amax.value_or(base)};
  ps::BivariateCaps bc{a.tmax.value_or(base), a.qmax.value_or(base), a.umax.value_or(3)};
  auto group = [&] { return ps::make_group(a.r, a.p, a.s, a.n); };

  const std::string& id = a.identity;
  if (id == "character-fmaj") return ps::verify_character_fmaj(group(), a.eps, a.k, opts);
  if (id == "signed-multinomial") {
    const auto parts = parse_ints(a.composition);
    int n = 0;
    for (int x : parts) n += x;
    return ps::verify_signed_multinomial(n, parts);
  }
  if (id == "signed-wreath") return ps::verify_signed_wreath(a.r, a.n, opts);
  if (id == "lift") return ps::verify_lift_identity(a.r, a.s, a.n, opts);
  if (id == "carlitz-des") return ps::verify_carlitz_des(group(), cc, opts);
  if (id == "carlitz-fdes") return ps::verify_carlitz_fdes(group(), cc, opts);
  if (id == "fdes-trivariate") return ps::verify_fdes_trivariate(group(), cc, opts);
  if (id == "six-stats") return ps::verify_six_stats(a.r, a.p, a.s, a.nmax, bc, opts);
  if (id == "hilbert") {
    return ps::verify_hilbert(a.r, a.p, a.s, a.nmax, a.qmax.value_or(base), opts);
  }
  std::string known;
  for (const auto& name : ps::identity_names()) known += " " + name;
  throw ps::RangeError("unknown identity '" + id + "'; expected one of:" + known);
}

int cmd_verify(const VerifyArgs& a) {
  const auto rep = run_verify(a);
  if (a.format == Format::Json) {
    print_json(rep.to_json());
  } else if (a.format == Format::Csv) {
    std::cout << "identity,outcome,count,compared,millis\n"
              << rep.identity << ',' << ps::to_string(rep.outcome) << ',' << rep.count << ','
              << rep.compared << ',' << rep.millis << '\n';
  } else {
    std::cout << rep.to_table();
  }
  return rep.matched() ? kExitMatch : kExitMismatch;
}

// ---------------------------------------------------------------------------
// bijection

struct BijectionArgs {
  std::string kind;
  std::string element;
  std::string group;
  std::string f;
  std::string lambda;
  std::string mu;
  int h = 0;
  int k = 0;
  Format format = Format::Table;
};

ps::GroupDescriptor signed_group_for(const std::string& window) {
  const auto w = ps::parse_window(window, 2);
  return ps::wreath_group(2, w.size());
}

struct Check {
  std::string name;
  bool ok;
};

int finish(ps::Json out, const std::vector<Check>& checks, Format format,
           const std::vector<std::pair<std::string, std::string>>& lines) {
  bool all = true;
  for (const auto& c : checks) all = all && c.ok;
  if (format == Format::Json) {
    ps::Json cj = ps::Json::object();
    for (const auto& c : checks) cj[c.name] = c.ok;
    out["checks"] = cj;
    out["ok"] = all;
    print_json(out);
  } else {
    for (const auto& [key, value] : lines) std::cout << key << "  " << value << '\n';
    for (const auto& c : checks) std::cout << (c.ok ? "ok    " : "FAIL  ") << c.name << '\n';
  }
  return all ? kExitMatch : kExitMismatch;
}

std::string tableau_text(const ps::Tableau& t) {
  if (t.rows.empty()) return "()";
  std::string out = "(";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i) out += " / ";
    out += join(t.rows[i], " ");
  }
  return out + ")";
}

int cmd_bijection(const BijectionArgs& a) {
  auto out = envelope("bijection");
  out["kind"] = a.kind;

  if (a.kind == "nvec") {
    const auto group = ps::parse_group(a.group);
    out["group"] = group.to_string();
    if (!a.f.empty()) {
      const auto f = parse_ints(a.f);
      const auto t = ps::nvec_encode(f, group);
      const auto back = ps::nvec_decode(t.element, t.lambda, t.h);
      const auto rec = ps::stat_record(t.element);
      int maxf = 0, sum = 0, lam_sum = 0;
      for (int x : f) maxf = std::max(maxf, x), sum += x;
      for (int x : t.lambda) lam_sum += x;
      const int step = group.lift_step();
      out["f"] = f;
      out["element"] = ps::format_element(t.element);
      out["lambda"] = t.lambda;
      out["h"] = t.h;
      return finish(out,
                    {{"decode(encode(f)) = f", back == f},
                     {"max f = fdes(g) + r*lambda_1 + h*r/s",
                      maxf == rec.fdes + group.r * t.lambda.front() + t.h * step},
                     {"|f| = fmaj(g) + r|lambda| + h*n*r/s",
                      sum == rec.fmaj + group.r * lam_sum + t.h * group.n * step},
                     {"col_{r/s}(f) = col(g)", ps::col_residues(f, step) == rec.col}},
                    a.format,
                    {{"f      ", paren(f)},
                     {"g      ", ps::format_element(t.element)},
                     {"lambda ", paren(t.lambda)},
                     {"h      ", std::to_string(t.h)}});
    }
    const auto g = ps::parse_element(a.element, group);
    const auto lambda = parse_ints(a.lambda);
    const auto f = ps::nvec_decode(g, lambda, a.h);
    const auto t = ps::nvec_encode(f, group);
    out["element"] = ps::format_element(g);
    out["lambda"] = lambda;
    out["h"] = a.h;
    out["f"] = f;
    return finish(out,
                  {{"encode(decode(g, lambda, h)) = (g, lambda, h)",
                    t.element == g && t.lambda == lambda && t.h == a.h}},
                  a.format,
                  {{"g      ", ps::format_element(g)},
                   {"lambda ", paren(lambda)},
                   {"h      ", std::to_string(a.h)},
                   {"f      ", paren(f)}});
  }

  if (a.kind == "bipartite") {
    const auto group = ps::parse_group(a.group);
    const auto g = ps::parse_element(a.element, group);
    const auto lambda = parse_ints(a.lambda);
    const auto mu = parse_ints(a.mu);
    const auto f = ps::bipartite_from_tuple(g, lambda, mu, a.h, a.k);
    const auto gi = ps::inverse(g);
    const auto rg = ps::stat_record(g);
    const auto ri = ps::stat_record(gi);
    const int step = group.lift_step();
    const int n = group.n;
    auto mx = [](const std::vector<int>& v) { return *std::max_element(v.begin(), v.end()); };
    auto sm = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
    const int type = ps::bipartite_type(f, group.r, group.s);
    out["group"] = group.to_string();
    out["element"] = ps::format_element(g);
    out["f"] = ps::to_json(f);
    out["type"] = type;
    return finish(
        out,
        {{"2-partite with a common type", type >= 0},
         {"(a) max f1", mx(f.top) == rg.fdes + group.r * lambda.front() + a.h * step},
         {"(b) max f2", mx(f.bottom) == ri.fdes + group.r * mu.front() + a.k * step},
         {"(c) |f1|", sm(f.top) == rg.fmaj + group.r * sm(lambda) + a.h * n * step},
         {"(d) |f2|", sm(f.bottom) == ri.fmaj + group.r * sm(mu) + a.k * n * step},
         {"(e) col f1", ps::col_residues(f.top, step) == rg.col},
         {"(f) col f2", ps::col_residues(f.bottom, step) == ri.col}},
        a.format,
        {{"g   ", ps::format_element(g)},
         {"f1  ", paren(f.top)},
         {"f2  ", paren(f.bottom)},
         {"type", std::to_string(type)}});
  }

  if (a.kind == "order-involution") {
    const auto group = a.group.empty()
                           ? ps::wreath_group(2, ps::parse_window(a.element, 2).size())
                           : ps::parse_group(a.group);
    const auto g = ps::parse_element(a.element, group);
    const auto img = ps::order_involution(g);
    out["group"] = group.to_string();
    out["element"] = ps::format_element(g);
    out["image"] = ps::format_element(img);
    return finish(out,
                  {{"Des(image) = Des'(g)",
                    ps::des_set(img, ps::Order::Color) == ps::des_set(g, ps::Order::Prime)},
                   {"col(image) = col(g)", ps::color_statistic(img) == ps::color_statistic(g)},
                   {"involution", ps::order_involution(img) == g}},
                  a.format, {{"g    ", ps::format_element(g)}, {"image", ps::format_element(img)}});
  }

  if (a.kind == "rs" || a.kind == "rs-transpose") {
    const auto group = signed_group_for(a.element);
    const auto g = ps::parse_element(a.element, group);
    const auto style = ps::WindowStyle::Signed;
    out["group"] = group.to_string();
    out["element"] = ps::format_element(g, style);
    if (a.kind == "rs") {
      const auto t = ps::rs_correspondence(g);
      out["bitableau"] = ps::to_json(t);
      return finish(out, {{"inverse recovers g", ps::rs_inverse(t) == g}}, a.format,
                    {{"g ", ps::format_element(g, style)},
                     {"P0", tableau_text(t.p0)},
                     {"P1", tableau_text(t.p1)},
                     {"Q0", tableau_text(t.q0)},
                     {"Q1", tableau_text(t.q1)}});
    }
    const auto img = ps::rs_transpose_map(g);
    const auto neg = [](const ps::ProjectiveElement& x) { return ps::bn_descent_split(x).neg; };
    out["image"] = ps::format_element(img, style);
    return finish(
        out,
        {{"Neg(image) = Neg(g)", neg(img) == neg(g)},
         {"Des(g) = Des'(image)",
          ps::des_set(g, ps::Order::Color) == ps::des_set(img, ps::Order::Prime)},
         {"Des(g^-1) = Des'(image^-1)",
          ps::des_set(ps::inverse(g), ps::Order::Color) ==
              ps::des_set(ps::inverse(img), ps::Order::Prime)}},
        a.format,
        {{"g    ", ps::format_element(g, style)}, {"image", ps::format_element(img, style)}});
  }

  throw ps::RangeError("unknown bijection '" + a.kind +
                       "'; expected nvec, bipartite, order-involution, rs or rs-transpose");
}

void add_format(CLI::App* cmd, Format& format) {
  static const std::map<std::string, Format> names = {
      {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
  cmd->add_option("--format", format, "Output format: table, json or csv")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
  cmd->add_flag_callback("--json", [&format] { format = Format::Json; }, "Same as --format json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statistics, identity checks and bijections on the groups G(r,p,s,n)"};
  app.require_subcommand(1);

  StatsArgs sa;
  auto* stats = app.add_subcommand("stats", "Statistics of one element or of a whole group");
  stats->add_option("group", sa.group, "Group, e.g. G(6,2,3,8)")->required();
  stats->add_option("element", sa.element, "Window, e.g. [2^2,7^3,1]");
  stats->add_flag("--dist", sa.dist, "Print the (des, fmaj, col) distribution");
  add_format(stats, sa.format);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check an identity on a finite region");
  verify->add_option("identity", va.identity, "Identity name")->required();
  verify->add_option("--r", va.r, "r");
  verify->add_option("--p", va.p, "p");
  verify->add_option("--s", va.s, "s");
  verify->add_option("--n", va.n, "n");
  verify->add_option("--eps", va.eps, "Character sign, +1 or -1");
  verify->add_option("--k", va.k, "Character exponent");
  verify->add_option("--tmax", va.tmax, "t cap (default 6)");
  verify->add_option("--qmax", va.qmax, "q cap (default 6)");
  verify->add_option("--amax", va.amax, "a cap (default 6)");
  verify->add_option("--umax", va.umax, "u cap (default 3)");
  verify->add_option("--caps", va.caps, "Default for every t/q/a cap");
  verify->add_option("--nmax", va.nmax, "Largest rank for series over all n");
  verify->add_option("--composition", va.composition, "Parts k_{r-1},...,k_0, e.g. 2,1");
  verify->add_option("--threads", va.threads, "Worker threads (0: all cores)");
  verify->add_option("--budget", va.budget, "Largest group order to enumerate");
  add_format(verify, va.format);

  BijectionArgs ba;
  auto* bij = app.add_subcommand("bijection", "Apply one of the bijections");
  bij->add_option("kind", ba.kind, "nvec, bipartite, order-involution, rs, rs-transpose")
      ->required();
  bij->add_option("element", ba.element, "Window of the input element");
  bij->add_option("--group", ba.group, "Group, e.g. G(2,1,1,2)");
  bij->add_option("--f", ba.f, "Integer vector to encode, e.g. 3,1");
  bij->add_option("--lambda", ba.lambda, "Partition, padded to n parts");
  bij->add_option("--mu", ba.mu, "Second partition (bipartite)");
  bij->add_option("--h-index", ba.h, "Lift index h");
  bij->add_option("--k-index", ba.k, "Lift index k (bipartite)");
  add_format(bij, ba.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*stats) return cmd_stats(sa);
    if (*verify) return cmd_verify(va);
    return cmd_bijection(ba);
  } catch (const ps::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
