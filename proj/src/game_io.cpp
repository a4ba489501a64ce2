#include "multigame/game_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace multigame {

namespace {

std::string agent_label(std::size_t agent) { return "agent " + std::to_string(agent + 1); }

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw InputError(path + ": " + message);
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array_of(const Json& value, std::size_t size, const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array");
  if (value.size() != size) {
    fail(path, "expected " + std::to_string(size) + " entries, found " + std::to_string(value.size()));
  }
  return value;
}

std::vector<Rational> rational_list(const Json& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array");
  std::vector<Rational> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(rational_from_json(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<double> double_list(const Json& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array");
  std::vector<double> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string where = path + "[" + std::to_string(i) + "]";
    // JSON numbers keep the parser's correctly rounded double; mpq get_d truncates.
    if (value[i].is_number()) {
      out.push_back(value[i].get<double>());
    } else {
      out.push_back(to_double(rational_from_json(value[i], where)));
    }
  }
  return out;
}

PayoffTable payoff_from_json(const Json& value, const std::string& path) {
  PayoffTable table;
  for (Action own : {Action::C, Action::D}) {
    const std::string own_path = path + "." + to_string(own);
    const Json& row = member(value, to_string(own), path);
    for (Action opp : {Action::C, Action::D}) {
      table(own, opp) = rational_from_json(member(row, to_string(opp), own_path), own_path + "." + to_string(opp));
    }
  }
  return table;
}

TypeSpace type_space_from_json(const Json& value, std::size_t agent) {
  const std::string path = "type_spaces[" + std::to_string(agent) + "]";
  const Json& kind_value = member(value, "kind", path);
  if (!kind_value.is_string()) fail(path + ".kind", "expected a string");
  const std::string kind = kind_value.get<std::string>();
  try {
    if (kind == "discrete") {
      return DiscreteTypeSpace(rational_list(member(value, "points", path), path + ".points"),
                               rational_list(member(value, "probs", path), path + ".probs"));
    }
    if (kind == "uniform") return Uniform01{};
    if (kind == "cdf") {
      return TabulatedCdf(double_list(member(value, "knots", path), path + ".knots"),
                          double_list(member(value, "values", path), path + ".values"));
    }
  } catch (const InputError& e) {
    const std::string what = e.what();
    // Field-path errors already carry their location.
    if (what.rfind("type_spaces[", 0) == 0) throw InputError(what + " (" + agent_label(agent) + ")");
    fail(path + " (" + agent_label(agent) + ")", what);
  }
  fail(path + ".kind", "unknown kind \"" + kind + "\" (expected discrete, uniform or cdf)");
}

Json payoff_to_json(const PayoffTable& table) {
  Json out = Json::object();
  for (Action own : {Action::C, Action::D}) {
    Json row = Json::object();
    for (Action opp : {Action::C, Action::D}) row[to_string(opp)] = rational_to_json(table(own, opp));
    out[to_string(own)] = std::move(row);
  }
  return out;
}

Json type_space_to_json(const TypeSpace& space) {
  Json out = Json::object();
  if (const auto* d = std::get_if<DiscreteTypeSpace>(&space)) {
    out["kind"] = "discrete";
    Json points = Json::array();
    Json probs = Json::array();
    for (const Rational& q : d->points()) points.push_back(rational_to_json_string(q));
    for (const Rational& q : d->probs()) probs.push_back(rational_to_json_string(q));
    out["points"] = std::move(points);
    out["probs"] = std::move(probs);
  } else if (std::holds_alternative<Uniform01>(space)) {
    out["kind"] = "uniform";
  } else {
    const auto& tab = std::get<TabulatedCdf>(space);
    out["kind"] = "cdf";
    out["knots"] = tab.knots();
    out["values"] = tab.values();
  }
  return out;
}

}  // namespace

Rational rational_from_json(const Json& value, const std::string& path) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return parse_rational(value.dump());
    if (value.is_number_float()) return parse_rational(value.dump());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  fail(path, "expected a number or a \"num/den\" string");
}

Json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return static_cast<std::int64_t>(q.get_num().get_si());
  return to_string(q);
}

Json rational_to_json_string(const Rational& q) { return to_string(q); }

Multigame game_from_json(const Json& doc) {
  if (!doc.is_object()) fail("$", "expected a JSON object");
  for (const auto& [key, unused] : doc.items()) {
    if (key != "agents" && key != "local_games" && key != "type_spaces" && key != "dgpd" && key != "description") {
      fail(key, "unknown key");
    }
  }
  const Json& agents = member(doc, "agents", "$");
  if (!agents.is_number_integer() || agents.get<long long>() != 2) fail("agents", "only two-agent games are supported");

  const Json& games_json = array_of(member(doc, "local_games", "$"), 2, "local_games");
  std::vector<LocalGame> games(2);
  for (std::size_t j = 0; j < 2; ++j) {
    const std::string game_path = "local_games[" + std::to_string(j) + "]";
    const Json& per_agent = array_of(games_json[j], 2, game_path);
    for (std::size_t i = 0; i < 2; ++i) {
      games[j].agent[i] = payoff_from_json(per_agent[i], game_path + "[" + std::to_string(i) + "]");
    }
  }

  const Json& spaces_json = array_of(member(doc, "type_spaces", "$"), 2, "type_spaces");
  std::array<TypeSpace, 2> spaces{type_space_from_json(spaces_json[0], 0), type_space_from_json(spaces_json[1], 1)};

  std::optional<DgpdParams> dgpd;
  if (const auto it = doc.find("dgpd"); it != doc.end()) {
    DgpdParams q;
    q.t = rational_from_json(member(*it, "t", "dgpd"), "dgpd.t");
    q.r = rational_from_json(member(*it, "r", "dgpd"), "dgpd.r");
    q.y = rational_from_json(member(*it, "y", "dgpd"), "dgpd.y");
    q.p = rational_from_json(member(*it, "p", "dgpd"), "dgpd.p");
    q.s = rational_from_json(member(*it, "s", "dgpd"), "dgpd.s");
    dgpd = q;
  }
  try {
    return Multigame(std::move(games), std::move(spaces), dgpd);
  } catch (const InputError& e) {
    fail("dgpd", e.what());
  }
}

Multigame parse_game_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return game_from_json(doc);
}

Multigame parse_game_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_game_text(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Json game_to_json(const Multigame& game) {
  Json doc = Json::object();
  doc["agents"] = 2;
  Json games = Json::array();
  for (const LocalGame& g : game.local_games()) {
    games.push_back(Json::array({payoff_to_json(g.agent[0]), payoff_to_json(g.agent[1])}));
  }
  doc["local_games"] = std::move(games);
  doc["type_spaces"] = Json::array({type_space_to_json(game.type_space(0)), type_space_to_json(game.type_space(1))});
  if (const auto& q = game.declared_dgpd()) {
    doc["dgpd"] = {{"t", rational_to_json(q->t)},
                   {"r", rational_to_json(q->r)},
                   {"y", rational_to_json(q->y)},
                   {"p", rational_to_json(q->p)},
                   {"s", rational_to_json(q->s)}};
  }
  return doc;
}

std::string serialize_game(const Multigame& game) { return game_to_json(game).dump(2) + "\n"; }

void write_game_file(const Multigame& game, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << serialize_game(game);
}

}  // namespace multigame
