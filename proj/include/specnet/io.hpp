#pragma once

#include "specnet/nonabel.hpp"
#include "specnet/wkb.hpp"

#include <json.hpp>

namespace specnet {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ojson = nlohmann::ordered_json;

inline constexpr const char* kNetworkSchema = "specnet-network/1";

ojson network_to_json(const SpectralNetwork& net);
SpectralNetwork network_from_json(const nlohmann::json& j);

// {"weave": ..., "variables": [...], "augmentation": {chord: laurent}} in
// chord order z.., w.., t..
ojson augmentation_to_json(const Augmentation& a, const std::string& weave_name);
// Chord values of an augmentation document (fixture or computed); variable
// names come from its "variables" entry, default s1, s2, ...
std::vector<std::pair<std::string, LaurentPoly>> read_augmentation(const nlohmann::json& j);

// First chord whose values differ (or that is missing on one side).
std::optional<std::string> first_difference(const nlohmann::json& computed, const nlohmann::json& fixture);

ojson bps_to_json(const SpectralNetwork& net, const BpsTable& table);
ojson wkb_to_json(const WkbNetwork& w);

struct SvgStyle {
    double width = 640;
    double height = 640;
    double margin = 24;
};

std::string export_svg(const SpectralNetwork& net, const SvgStyle& style = {});

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace specnet
