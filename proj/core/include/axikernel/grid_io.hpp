#pragma once

// CSV persistence of meridian grid fields. A leading '#' comment block
// records the axes, quantity tag and provenance; the body is one row per
// grid point, row-major with r as the slow index, printed with 17
// significant digits so a write/read pair is value-exact.

#include <filesystem>

#include <axikernel/fields.hpp>

namespace axikernel {

void write_scalar_field_csv(const std::filesystem::path& path, const MeridianScalarField& f,
                            bool stamp = false);
MeridianScalarField read_scalar_field_csv(const std::filesystem::path& path);

void write_velocity_field_csv(const std::filesystem::path& path,
                              const MeridianVelocityField& f, bool stamp = false);
MeridianVelocityField read_velocity_field_csv(const std::filesystem::path& path);

} // namespace axikernel
