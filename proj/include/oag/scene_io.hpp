#pragma once

#include "oag/verdict.hpp"

#include <istream>

namespace oag {

Scene parse_scene(std::istream& in);
Scene parse_scene_text(const std::string& text);
Scene load_scene(const std::string& path);
std::string serialize_scene(const Scene& scene);
std::string rational_text(const Q& q);
std::string element_text(const Ambient& amb, const GroupElement& x);
GroupElement parse_element(const Ambient& amb, const std::string& text);

}
