#include "branchcones/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "branchcones/bz.hpp"
#include "branchcones/errors.hpp"
#include "branchcones/io.hpp"
#include "branchcones/itrails.hpp"
#include "branchcones/lattice.hpp"
#include "branchcones/oracle.hpp"

namespace branchcones {

namespace {

using nlohmann::json;

const std::vector<std::string> kCommands{"dim", "lr", "branch", "invariant", "bz", "cone-export", "itrails", "maps-check"};

std::string rational_text(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("trailing");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InvalidArgument(std::string("bad ") + what + " '" + text + "'");
    }
  }
  return out;
}

SimpleSet parse_subset(const std::string& text) {
  auto v = parse_ints(text, "subset");
  return SimpleSet(v.begin(), v.end());
}

std::vector<Weight> parse_weight_list(const std::string& text) {
  std::vector<Weight> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_weight(item));
  return out;
}

// --------------------------------------------------------------- jobs

ReducedWord resolve_word(const RootSystem& rs, const std::string& text) {
  if (text == "default") return rs.longest_word();
  ReducedWord w = parse_word(text);
  if (!is_longest_word(rs, w)) throw InvalidArgument("word " + text + " is not a reduced word for the longest element");
  return w;
}

const Weight& need(const std::optional<Weight>& w, const char* name) {
  if (!w) throw InvalidArgument(std::string("missing --") + name);
  return *w;
}

Weight dominant_input(const RootSystem& rs, const std::optional<Weight>& w, const char* name) {
  const Weight& v = need(w, name);
  if (v.rank() != rs.rank())
    throw InvalidArgument(std::string(name) + " has " + std::to_string(v.rank()) + " coordinates, rank is " +
                          std::to_string(rs.rank()));
  if (!v.is_dominant()) throw InvalidArgument(std::string(name) + " must be dominant, got " + to_string(v));
  return v;
}

EnumOptions enum_options(const JobSpec& spec) {
  EnumOptions o;
  o.threads = std::max(1u, spec.threads);
  return o;
}

json result_counts(std::uint64_t count, const BigInt& oracle) {
  return {{"count", count}, {"oracle", to_json(oracle)}, {"agree", BigInt(count) == oracle}};
}

json run_dim(const JobSpec& spec, const RootSystem& rs) {
  Weight lambda = dominant_input(rs, spec.lambda, "lambda");
  ReducedWord word = resolve_word(rs, spec.word);
  auto p = slice(string_cone(rs, word, spec.variant), std::map<std::string, Weight>{{"lambda", lambda}});
  json out = result_counts(count_points(p, enum_options(spec)), irrep_dimension(rs, lambda));
  out["lambda"] = to_json(lambda);
  out["word"] = word.letters;
  return out;
}

json run_lr(const JobSpec& spec, const RootSystem& rs) {
  Weight lambda = dominant_input(rs, spec.lambda, "lambda");
  Weight beta = dominant_input(rs, spec.beta, "beta");
  Weight mu = dominant_input(rs, spec.mu, "mu");
  ReducedWord word = resolve_word(rs, spec.word);
  auto p = slice(triple_cone(rs, word, spec.variant),
                 std::map<std::string, Weight>{{"lambda", lambda}, {"beta", beta}, {"mu", mu}});
  json out = result_counts(count_points(p, enum_options(spec)), tensor_multiplicity(rs, lambda, beta, mu));
  out["lambda"] = to_json(lambda);
  out["beta"] = to_json(beta);
  out["mu"] = to_json(mu);
  out["word"] = word.letters;
  return out;
}

json run_branch(const JobSpec& spec, const RootSystem& rs) {
  Weight lambda = dominant_input(rs, spec.lambda, "lambda");
  if (!spec.subset) throw InvalidArgument("missing --subset");
  const SimpleSet& subset = *spec.subset;
  LeviWords words = levi_adapted_words(rs, subset);
  if (spec.levi_word != "default") words.levi = parse_word(spec.levi_word);
  if (spec.coset_word != "default") words.coset = parse_word(spec.coset_word);
  ConeH cone = levi_cone(rs, subset, words.levi, words.coset, spec.variant);

  std::map<Weight, BigInt> oracle;
  for (const auto& [eta, m] : levi_branching(rs, subset, lambda)) oracle[eta] = m;

  json out;
  out["lambda"] = to_json(lambda);
  out["subset"] = std::vector<int>(subset.begin(), subset.end());
  out["levi_word"] = words.levi.letters;
  out["coset_word"] = words.coset.letters;
  if (spec.eta) {
    if (spec.eta->rank() != rs.rank()) throw InvalidArgument("eta rank mismatch");
    auto p = slice(cone, std::map<std::string, Weight>{{"lambda", lambda}, {"eta", *spec.eta}});
    auto it = oracle.find(*spec.eta);
    out.update(result_counts(count_points(p, enum_options(spec)), it == oracle.end() ? BigInt(0) : it->second));
    out["eta"] = to_json(*spec.eta);
    return out;
  }

  auto p = slice(cone, std::map<std::string, Weight>{{"lambda", lambda}});
  const Block& eta_block = cone.block("eta");
  std::map<Weight, std::uint64_t> counts;
  for (const auto& x : enumerate_points(p, enum_options(spec))) {
    auto full = p.lift(x);
    Weight eta(std::vector<std::int64_t>(full.begin() + eta_block.offset, full.begin() + eta_block.offset + eta_block.length));
    ++counts[eta];
  }
  std::set<Weight> keys;
  for (const auto& [w, c] : counts) keys.insert(w);
  for (const auto& [w, m] : oracle) keys.insert(w);

  bool agree = true;
  BigInt dimension = 0;
  json components = json::array();
  for (const auto& eta : keys) {
    std::uint64_t c = counts.count(eta) ? counts[eta] : 0;
    BigInt m = oracle.count(eta) ? oracle[eta] : BigInt(0);
    BigInt ldim = levi_dimension(rs, subset, eta);
    dimension += BigInt(c) * ldim;
    agree = agree && BigInt(c) == m;
    components.push_back({{"eta", to_json(eta)}, {"count", c}, {"oracle", to_json(m)}, {"levi_dimension", to_json(ldim)}});
  }
  BigInt full_dim = irrep_dimension(rs, lambda);
  out["components"] = components;
  out["dimension"] = to_json(dimension);
  out["oracle_dimension"] = to_json(full_dim);
  out["agree"] = agree && dimension == full_dim;
  return out;
}

json run_invariant(const JobSpec& spec, const RootSystem& rs) {
  if (spec.tree.empty()) throw InvalidArgument("missing --tree");
  Tree tree = Tree::parse(spec.tree);
  if (static_cast<int>(spec.weights.size()) != tree.n() + 1)
    throw InvalidArgument("tree has " + std::to_string(tree.n() + 1) + " leaves but " +
                          std::to_string(spec.weights.size()) + " weights were given");
  for (const auto& w : spec.weights) dominant_input(rs, w, "weights");
  if (spec.model != "both" && spec.model != "cone" && spec.model != "quilt")
    throw InvalidArgument("--model must be cone, quilt or both");

  BigInt oracle = multi_tensor_invariant_dim(rs, spec.weights);
  json out;
  out["tree"] = tree.to_string();
  json ws = json::array();
  for (const auto& w : spec.weights) ws.push_back(to_json(w));
  out["weights"] = ws;
  out["oracle"] = to_json(oracle);
  bool agree = true;
  std::optional<std::uint64_t> count;
  if (spec.model != "quilt") {
    TreeStrings strings;
    for (const auto& [v, text] : spec.strings) strings[v] = resolve_word(rs, text);
    auto p = slice(tree_fiber_cone(rs, tree, strings, spec.variant), tree_leaf_assignment(tree, spec.weights));
    std::uint64_t c = count_points(p, enum_options(spec));
    out["cone_count"] = c;
    agree = agree && BigInt(c) == oracle;
    count = c;
  }
  if (spec.model != "cone") {
    if (!rs.is_type_a()) throw Unsupported("quilts are defined for type A only");
    auto q = enumerate_quilts(rs.rank() + 1, tree, spec.weights, spec.list, enum_options(spec));
    out["quilt_count"] = q.count;
    if (spec.list) {
      BZTemplate t = bz_template(rs.rank() + 1);
      json qs = json::array();
      for (const auto& quilt : q.quilts) qs.push_back(to_json(tree, t, quilt));
      out["quilts"] = qs;
    }
    agree = agree && BigInt(q.count) == oracle;
    if (!count) count = q.count;
  }
  out["count"] = *count;
  out["agree"] = agree;
  return out;
}

json run_bz(const JobSpec& spec, const RootSystem& rs) {
  if (!rs.is_type_a()) throw Unsupported("BZ triangles are defined for type A only");
  if (spec.weights.size() != 3) throw InvalidArgument("bz needs exactly three weights");
  for (const auto& w : spec.weights) dominant_input(rs, w, "weights");
  BZTemplate t = bz_template(rs.rank() + 1);
  const auto& w = spec.weights;
  BigInt oracle = triple_invariant_dim(rs, w[0], w[1], w[2]);
  json out;
  if (spec.list) {
    auto fillings = enumerate_bz(t, w[0], w[1], w[2], enum_options(spec));
    json fs = json::array();
    for (const auto& f : fillings) fs.push_back(f.values);
    out = result_counts(fillings.size(), oracle);
    out["fillings"] = fs;
  } else {
    out = result_counts(count_bz(t, w[0], w[1], w[2], enum_options(spec)), oracle);
  }
  out["template"] = template_descriptor(t);
  out["weights"] = {to_json(w[0]), to_json(w[1]), to_json(w[2])};
  return out;
}

json run_cone_export(const JobSpec& spec, const RootSystem& rs) {
  if (spec.output.empty()) throw InvalidArgument("cone-export needs --out");
  ConeH cone;
  if (spec.kind == "c") {
    cone = string_cone(rs, resolve_word(rs, spec.word), spec.variant);
  } else if (spec.kind == "c3") {
    cone = triple_cone(rs, resolve_word(rs, spec.word), spec.variant);
  } else if (spec.kind == "cl") {
    if (!spec.subset) throw InvalidArgument("cone-export --kind cl needs --subset");
    LeviWords words = levi_adapted_words(rs, *spec.subset);
    if (spec.levi_word != "default") words.levi = parse_word(spec.levi_word);
    if (spec.coset_word != "default") words.coset = parse_word(spec.coset_word);
    cone = levi_cone(rs, *spec.subset, words.levi, words.coset, spec.variant);
  } else if (spec.kind == "tree") {
    if (spec.tree.empty()) throw InvalidArgument("cone-export --kind tree needs --tree");
    TreeStrings strings;
    for (const auto& [v, text] : spec.strings) strings[v] = resolve_word(rs, text);
    cone = tree_fiber_cone(rs, Tree::parse(spec.tree), strings, spec.variant);
  } else if (spec.kind == "bz") {
    cone = bz_cone(bz_template(rs.rank() + 1));
  } else {
    throw InvalidArgument("--kind must be one of c, c3, cl, tree, bz");
  }
  auto sidecar = export_cone(cone, spec.output);
  return {{"kind", spec.kind},
          {"file", spec.output},
          {"sidecar", sidecar.string()},
          {"dimension", cone.dimension()},
          {"inequalities", cone.inequalities().size()},
          {"equalities", cone.equalities().size()},
          {"rows", cone.inequalities().size() + 2 * cone.equalities().size()}};
}

json run_itrails(const JobSpec& spec, const RootSystem& rs) {
  if (spec.j < 1 || spec.j > rs.rank()) throw InvalidArgument("--j must lie in 1..rank");
  ReducedWord word = resolve_word(rs, spec.word);
  const Weight omega = Weight::fundamental(rs.rank(), spec.j);
  Weight from, to;
  if (spec.family == "highest") {
    from = omega;
    to = apply_longest(rs, simple_reflection(rs, spec.j, omega));
  } else if (spec.family == "lowered") {
    from = simple_reflection(rs, spec.j, omega);
    to = apply_longest(rs, omega);
  } else if (spec.family == "custom") {
    from = need(spec.from, "from");
    to = need(spec.to, "to");
  } else {
    throw InvalidArgument("--family must be highest, lowered or custom");
  }
  WeightDiagram diagram = minuscule_weight_diagram(rs, spec.j);
  json trails = json::array();
  for (const auto& trail : enumerate_itrails(diagram, word, from, to)) {
    json ws = json::array();
    for (const auto& w : trail.weights) ws.push_back(to_json(w));
    json d = json::array();
    for (const auto& q : d_vector(rs, trail)) d.push_back(rational_text(q));
    trails.push_back({{"weights", ws}, {"steps", trail.steps}, {"d", d}});
  }
  return {{"j", spec.j}, {"word", word.letters}, {"from", to_json(from)}, {"to", to_json(to)},
          {"count", trails.size()}, {"trails", trails}};
}

json run_maps_check(const JobSpec& spec) {
  std::mt19937 rng(static_cast<std::mt19937::result_type>(spec.seed));
  std::uniform_int_distribution<int> rank_dist(1, 3), num_dist(0, 12), den_dist(1, 6), coord_dist(-4, 4);
  auto random_tuple = [&](std::size_t slots, const std::shared_ptr<const RootSystem>& g) {
    CoweightTuple t;
    for (std::size_t s = 0; s < slots; ++s) {
      Coweight c{g, {}};
      for (int i = 0; i < g->rank(); ++i) c.coords.emplace_back(num_dist(rng), den_dist(rng));
      t.slots.push_back(std::move(c));
    }
    return t;
  };
  auto random_weights = [&](std::size_t n, int rank) {
    std::vector<Weight> ws;
    for (std::size_t s = 0; s < n; ++s) {
      Weight w = Weight::zero(rank);
      for (int i = 0; i < rank; ++i) w[i] = coord_dist(rng);
      ws.push_back(std::move(w));
    }
    return ws;
  };

  bool agree = true;
  json chains = json::array();
  for (int k : spec.chains) {
    if (k < 1) throw InvalidArgument("chain lengths must be positive");
    int face_fail = 0, degen_fail = 0;
    for (int s = 0; s < spec.samples; ++s) {
      auto g = std::make_shared<const RootSystem>(build_root_system(rank_dist(rng)));
      const std::size_t slots = static_cast<std::size_t>(k) + 1;
      auto rho = random_tuple(slots, g);
      std::size_t pos = std::uniform_int_distribution<std::size_t>(1, k)(rng);
      auto lambdas = random_weights(slots + 1, g->rank());
      if (coweight_value(face_pullback(rho, pos), lambdas) != coweight_value(rho, face_pushforward(lambdas, pos)))
        ++face_fail;
      std::size_t dpos = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
      auto shorter = random_weights(slots - 1, g->rank());
      if (coweight_value(degeneracy_pullback(rho, dpos), shorter) !=
          coweight_value(rho, degeneracy_pushforward(shorter, dpos)))
        ++degen_fail;
    }
    agree = agree && face_fail == 0 && degen_fail == 0;
    chains.push_back({{"k", k}, {"samples", spec.samples}, {"face_failures", face_fail},
                      {"degeneracy_failures", degen_fail}});
  }
  return {{"seed", spec.seed}, {"chains", chains}, {"agree", agree}};
}

// ------------------------------------------------------------ JSON jobs

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw InvalidArgument(std::string("job field '") + key + "' has the wrong type");
  }
}

std::string kind_of_error(const std::exception& e) {
  if (dynamic_cast<const InvalidArgument*>(&e)) return "invalid-argument";
  if (dynamic_cast<const Unsupported*>(&e)) return "unsupported";
  if (dynamic_cast<const UnboundedRegion*>(&e)) return "unbounded-region";
  if (dynamic_cast<const ResourceLimit*>(&e)) return "resource-limit";
  if (dynamic_cast<const InvalidFilling*>(&e)) return "invalid-filling";
  if (dynamic_cast<const InvariantBreach*>(&e)) return "invariant-breach";
  return "internal";
}

int exit_code_of(const std::exception& e) {
  if (dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const Unsupported*>(&e) ||
      dynamic_cast<const InvalidFilling*>(&e) || dynamic_cast<const UnboundedRegion*>(&e))
    return kExitUsage;
  if (dynamic_cast<const ResourceLimit*>(&e)) return kExitResource;
  return kExitInternal;
}

void print_error(std::ostream& out, const std::string& kind, const std::string& message) {
  json e = {{"error", {{"kind", kind}, {"message", message}}}};
  out << e.dump(2) << '\n';
}

}  // namespace

JobSpec job_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("a job must be a JSON object");
  JobSpec s;
  for (const auto& [key, v] : j.items()) {
    const char* k = key.c_str();
    if (key == "command") s.command = get_as<std::string>(v, k);
    else if (key == "rank") s.rank = get_as<int>(v, k);
    else if (key == "word") s.word = get_as<std::string>(v, k);
    else if (key == "strings") {
      if (!v.is_object()) throw InvalidArgument("job field 'strings' must map vertices to words");
      for (const auto& [vk, vw] : v.items()) s.strings[parse_ints(vk, "vertex").at(0)] = get_as<std::string>(vw, k);
    } else if (key == "lambda") s.lambda = weight_from_json(v);
    else if (key == "beta") s.beta = weight_from_json(v);
    else if (key == "mu") s.mu = weight_from_json(v);
    else if (key == "eta") s.eta = weight_from_json(v);
    else if (key == "from") s.from = weight_from_json(v);
    else if (key == "to") s.to = weight_from_json(v);
    else if (key == "weights") {
      if (!v.is_array()) throw InvalidArgument("job field 'weights' must be an array of weights");
      for (const auto& w : v) s.weights.push_back(weight_from_json(w));
    } else if (key == "subset") {
      auto ids = get_as<std::vector<int>>(v, k);
      s.subset = SimpleSet(ids.begin(), ids.end());
    } else if (key == "levi_word") s.levi_word = get_as<std::string>(v, k);
    else if (key == "coset_word") s.coset_word = get_as<std::string>(v, k);
    else if (key == "tree") s.tree = get_as<std::string>(v, k);
    else if (key == "variant") {
      if (!v.is_object()) throw InvalidArgument("job field 'variant' must be an object");
      for (const auto& [vk, vv] : v.items()) {
        auto text = get_as<std::string>(vv, vk.c_str());
        if (vk == "bound") s.variant.bound = parse_string_bound(text);
        else if (vk == "mu_sign") s.variant.mu_sign = parse_mu_sign(text);
        else if (vk == "beta_sign") s.variant.beta_sign = parse_beta_sign(text);
        else throw InvalidArgument("unknown variant field '" + vk + "'");
      }
    } else if (key == "kind") s.kind = get_as<std::string>(v, k);
    else if (key == "model") s.model = get_as<std::string>(v, k);
    else if (key == "family") s.family = get_as<std::string>(v, k);
    else if (key == "j") s.j = get_as<int>(v, k);
    else if (key == "list") s.list = get_as<bool>(v, k);
    else if (key == "verify") s.verify = get_as<bool>(v, k);
    else if (key == "seed") s.seed = get_as<std::uint64_t>(v, k);
    else if (key == "threads") s.threads = get_as<unsigned>(v, k);
    else if (key == "samples") s.samples = get_as<int>(v, k);
    else if (key == "chains") s.chains = get_as<std::vector<int>>(v, k);
    else if (key == "output") s.output = get_as<std::string>(v, k);
    else throw InvalidArgument("unknown job field '" + key + "'");
  }
  if (s.command.empty()) throw InvalidArgument("job needs a 'command'");
  return s;
}

json job_to_json(const JobSpec& s) {
  json j = {{"command", s.command}, {"rank", s.rank}, {"word", s.word}, {"levi_word", s.levi_word},
            {"coset_word", s.coset_word}, {"kind", s.kind}, {"model", s.model}, {"family", s.family},
            {"j", s.j}, {"list", s.list}, {"verify", s.verify}, {"seed", s.seed}, {"threads", s.threads},
            {"samples", s.samples}, {"chains", s.chains}};
  j["variant"] = {{"bound", to_string(s.variant.bound)},
                  {"mu_sign", to_string(s.variant.mu_sign)},
                  {"beta_sign", to_string(s.variant.beta_sign)}};
  if (!s.strings.empty()) {
    json strings = json::object();
    for (const auto& [v, w] : s.strings) strings[std::to_string(v)] = w;
    j["strings"] = strings;
  }
  const std::pair<const char*, const std::optional<Weight>*> optional_weights[] = {
      {"lambda", &s.lambda}, {"beta", &s.beta}, {"mu", &s.mu}, {"eta", &s.eta}, {"from", &s.from}, {"to", &s.to}};
  for (const auto& [name, w] : optional_weights)
    if (*w) j[name] = to_json(**w);
  if (!s.weights.empty()) {
    json ws = json::array();
    for (const auto& w : s.weights) ws.push_back(to_json(w));
    j["weights"] = ws;
  }
  if (s.subset) j["subset"] = std::vector<int>(s.subset->begin(), s.subset->end());
  if (!s.tree.empty()) j["tree"] = s.tree;
  if (!s.output.empty()) j["output"] = s.output;
  return j;
}

json run_job(const JobSpec& spec) {
  if (std::find(kCommands.begin(), kCommands.end(), spec.command) == kCommands.end())
    throw InvalidArgument("unknown command '" + spec.command + "'");
  json out;
  if (spec.command == "maps-check") {
    out = run_maps_check(spec);
  } else {
    if (spec.rank < 1) throw InvalidArgument("--rank must be at least 1");
    RootSystem rs = build_root_system(spec.rank);
    if (spec.command == "dim") out = run_dim(spec, rs);
    else if (spec.command == "lr") out = run_lr(spec, rs);
    else if (spec.command == "branch") out = run_branch(spec, rs);
    else if (spec.command == "invariant") out = run_invariant(spec, rs);
    else if (spec.command == "bz") out = run_bz(spec, rs);
    else if (spec.command == "cone-export") out = run_cone_export(spec, rs);
    else out = run_itrails(spec, rs);
    out["rank"] = spec.rank;
  }
  out["command"] = spec.command;
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polyhedral models of branching problems, checked against characters"};
  app.name("branchcones");
  app.require_subcommand(1);

  JobSpec spec;
  std::string lambda, beta, mu, eta, from, to, weights, subset, bound, mu_sign, beta_sign, job_file;
  std::vector<std::string> strings;
  std::string chains;

  auto common = [&](CLI::App* sub, bool needs_rank = true) {
    if (needs_rank) sub->add_option("--rank", spec.rank, "Rank r of SL_{r+1}")->required();
    sub->add_flag("--verify", spec.verify, "Exit 4 when the count disagrees with the oracle");
    sub->add_option("--seed", spec.seed, "Seed for randomized checks");
    sub->add_option("--threads", spec.threads, "Worker threads for enumeration");
    sub->add_option("--out", spec.output, "Write the JSON result (or exported cone) here");
    sub->add_option("--bound", bound, "String bound orientation: at-most | at-least");
    sub->add_option("--mu-sign", mu_sign, "lambda+beta-roots | roots-lambda+beta");
    sub->add_option("--beta-sign", beta_sign, "plus | minus");
  };

  auto* dim = app.add_subcommand("dim", "Count a string-cone slice against the Weyl dimension");
  common(dim);
  dim->add_option("--lambda", lambda, "Highest weight, e.g. 1,0")->required();
  dim->add_option("--word", spec.word, "Reduced word for w0, or 'default'");

  auto* lr = app.add_subcommand("lr", "Count a tensor-cone slice against Brauer-Klimyk");
  common(lr);
  lr->add_option("--lambda", lambda)->required();
  lr->add_option("--beta", beta)->required();
  lr->add_option("--mu", mu)->required();
  lr->add_option("--word", spec.word);

  auto* branch = app.add_subcommand("branch", "Levi branching cone against character subtraction");
  common(branch);
  branch->add_option("--lambda", lambda)->required();
  branch->add_option("--subset", subset, "Simple roots of the Levi, e.g. 1,3")->required();
  branch->add_option("--eta", eta, "Count only this Levi highest weight");
  branch->add_option("--levi-word", spec.levi_word);
  branch->add_option("--coset-word", spec.coset_word);

  auto* invariant = app.add_subcommand("invariant", "Tree fiber cone and quilts against the multi-tensor oracle");
  common(invariant);
  invariant->add_option("--tree", spec.tree, "Edge list such as 0-4,1-4,4-5,2-5,3-5")->required();
  invariant->add_option("--weights", weights, "Leaf weights lambda_0;...;lambda_n")->required();
  invariant->add_option("--model", spec.model, "cone | quilt | both");
  invariant->add_option("--string", strings, "Per-vertex word, e.g. 4=1,2,1");
  invariant->add_flag("--list", spec.list, "List the quilts");

  auto* bz = app.add_subcommand("bz", "Berenstein-Zelevinsky fillings for SL_{rank+1}");
  common(bz);
  bz->add_option("--weights", weights, "Three boundary weights l1;l2;l3")->required();
  bz->add_flag("--list", spec.list, "List the fillings");

  auto* exporter = app.add_subcommand("cone-export", "Write a cone as an H-representation with a JSON sidecar");
  common(exporter);
  exporter->add_option("--kind", spec.kind, "c | c3 | cl | tree | bz");
  exporter->add_option("--word", spec.word);
  exporter->add_option("--subset", subset);
  exporter->add_option("--tree", spec.tree);
  exporter->add_option("--string", strings);
  exporter->add_option("--levi-word", spec.levi_word);
  exporter->add_option("--coset-word", spec.coset_word);

  auto* itrails = app.add_subcommand("itrails", "List i-trails and their d-vectors");
  common(itrails);
  itrails->add_option("--j", spec.j, "Fundamental representation index")->required();
  itrails->add_option("--word", spec.word);
  itrails->add_option("--family", spec.family, "highest | lowered | custom");
  itrails->add_option("--from", from);
  itrails->add_option("--to", to);

  auto* maps = app.add_subcommand("maps-check", "Face/degeneracy identities on random rational data");
  common(maps, false);
  maps->add_option("--samples", spec.samples, "Samples per chain length");
  maps->add_option("--chains", chains, "Chain lengths, e.g. 2,3,4");

  auto* job = app.add_subcommand("job", "Run a JSON job file");
  job->add_option("file", job_file, "Job description")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    print_error(out, "usage", e.what());
    err << app.help();
    return kExitUsage;
  }

  try {
    if (job->parsed()) {
      std::ifstream in(job_file);
      if (!in) throw InvalidArgument("cannot read job file " + job_file);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("job file is not valid JSON: ") + e.what());
      }
      spec = job_from_json(j);
    } else {
      spec.command = app.get_subcommands().front()->get_name();
      if (!lambda.empty()) spec.lambda = parse_weight(lambda);
      if (!beta.empty()) spec.beta = parse_weight(beta);
      if (!mu.empty()) spec.mu = parse_weight(mu);
      if (!eta.empty()) spec.eta = parse_weight(eta);
      if (!from.empty()) spec.from = parse_weight(from);
      if (!to.empty()) spec.to = parse_weight(to);
      if (!weights.empty()) spec.weights = parse_weight_list(weights);
      if (!subset.empty()) spec.subset = parse_subset(subset);
      if (!bound.empty()) spec.variant.bound = parse_string_bound(bound);
      if (!mu_sign.empty()) spec.variant.mu_sign = parse_mu_sign(mu_sign);
      if (!beta_sign.empty()) spec.variant.beta_sign = parse_beta_sign(beta_sign);
      if (!chains.empty()) spec.chains = parse_ints(chains, "chain list");
      for (const auto& s : strings) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw InvalidArgument("--string expects vertex=word, got '" + s + "'");
        spec.strings[parse_ints(s.substr(0, eq), "vertex").at(0)] = s.substr(eq + 1);
      }
    }

    json result = run_job(spec);
    const std::string text = result.dump(2) + "\n";
    if (!spec.output.empty() && spec.command != "cone-export") {
      std::ofstream file(spec.output);
      if (!file) throw InvalidArgument("cannot write " + spec.output);
      file << text;
    } else {
      out << text;
    }
    if (spec.verify && result.contains("agree") && !result["agree"].get<bool>()) {
      err << "oracle disagreement\n";
      return kExitInternal;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    print_error(out, kind_of_error(e), e.what());
    return exit_code_of(e);
  }
}

}  // namespace branchcones
