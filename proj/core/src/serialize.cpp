#include "noodle/serialize.hpp"

#include <json.hpp>

namespace noodle {

using nlohmann::json;

std::string pair_system_to_json(const PairSystem& s) {
  json j;
  j["n"] = s.n();
  j["upper"] = s.upper().to_string();
  j["lower"] = s.lower().to_string();
  return j.dump();
}

PairSystem pair_system_from_json(const std::string& text) {
  json j = json::parse(text);
  PairSystem s(Word::from_string(j.at("upper").get<std::string>()),
               Word::from_string(j.at("lower").get<std::string>()));
  if (j.contains("n") && j.at("n").get<std::int64_t>() != s.n()) {
    throw std::invalid_argument("pair_system_from_json: size mismatch");
  }
  return s;
}

namespace {

json singleton_list(const PartialMatching& m) {
  json list = json::array();
  for (const auto& [pos, dec] : m.singletons()) {
    list.push_back(json::array({pos, std::string(1, to_char(dec))}));
  }
  return list;
}

}  // namespace

std::string partial_system_to_json(const PartialSystem& s) {
  json j;
  j["offset"] = s.domain().lo;
  j["upper"] = s.upper_word().to_string();
  j["lower"] = s.lower_word().to_string();
  j["upper_singletons"] = singleton_list(s.upper());
  j["lower_singletons"] = singleton_list(s.lower());
  return j.dump();
}

PartialSystem partial_system_from_json(const std::string& text) {
  json j = json::parse(text);
  Pos offset = j.value("offset", std::int64_t{0});
  return PartialSystem::from_words(
      Word::from_string(j.at("upper").get<std::string>(), offset),
      Word::from_string(j.at("lower").get<std::string>(), offset));
}

std::string meander_to_json(const Meander& m) { return pair_system_to_json(m.system()); }

Meander meander_from_json(const std::string& text) {
  return Meander(pair_system_from_json(text));
}

std::string partial_shape_to_json(const PartialShape& p) {
  return partial_system_to_json(p.system());
}

PartialShape partial_shape_from_json(const std::string& text) {
  return PartialShape(partial_system_from_json(text));
}

}  // namespace noodle
