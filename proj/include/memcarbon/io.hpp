#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "memcarbon/catalog.hpp"
#include "memcarbon/embodied.hpp"
#include "memcarbon/recipe.hpp"
#include "memcarbon/system.hpp"

namespace memcarbon::io {

// File schemas are documented in docs/file_formats.md. All JSON inputs are
// strict: a schema_version field is required and unknown fields are rejected,
// with errors naming the offending record and field.

nlohmann::json recipe_to_json(const ProcessRecipe& recipe);
ProcessRecipe recipe_from_json(const nlohmann::json& j, const std::string& context);
ProcessRecipe load_recipe(const std::filesystem::path& path);
void save_recipe(const ProcessRecipe& recipe, const std::filesystem::path& path);

nlohmann::json ghg_to_json(const GhgModel& ghg);
GhgModel ghg_from_json(const nlohmann::json& j, const std::string& context);
GhgModel load_ghg(const std::filesystem::path& path);

nlohmann::json fab_to_json(const FabBaseline& fab);
FabBaseline fab_from_json(const nlohmann::json& j, const std::string& context);
FabBaseline load_fab(const std::filesystem::path& path);

nlohmann::json device_to_json(const DeviceSpec& device);
DeviceSpec device_from_json(const nlohmann::json& j, const std::string& context);
DeviceTable load_devices(const std::filesystem::path& path);

// Accepts the CSV variant (field-name header plus unit row, '#' comments)
// and the JSON variant; the format is chosen by file extension.
DesignPointCatalog load_catalog(const std::filesystem::path& path);

AcceleratorConfig load_accelerator(const std::filesystem::path& path);
WorkloadProfile load_workload(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace memcarbon::io
