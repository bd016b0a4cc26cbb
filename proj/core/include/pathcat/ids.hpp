#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace pathcat {

enum class ObjId : std::uint32_t {};
enum class MorId : std::uint32_t {};

constexpr std::uint32_t idx(ObjId x) { return static_cast<std::uint32_t>(x); }
constexpr std::uint32_t idx(MorId m) { return static_cast<std::uint32_t>(m); }
constexpr ObjId obj_id(std::uint32_t v) { return static_cast<ObjId>(v); }
constexpr MorId mor_id(std::uint32_t v) { return static_cast<MorId>(v); }

using json = nlohmann::json;

inline void to_json(json& j, ObjId x) { j = idx(x); }
inline void to_json(json& j, MorId m) { j = idx(m); }

enum class Errc {
  NotComposable,
  MissingEntry,
  NoTerminal,
  NoPullback,
  MissingPullback,
  MissingSlicePathObject,
  NoFiller,
  CongruenceFailure,
  ResourceCap,
  NotHomotopical,
  NaturalityFailure,
  NotIsofibration,
  NotWeakEquivalence,
  MissingPiType,
  NoSuitablePf,
  ParseError,
  SchemaError,
  Precondition,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, json witness = nullptr)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  const json& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  json witness_;
};

}  // namespace pathcat
