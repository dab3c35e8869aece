#pragma once

namespace lie::data {
extern const char* const realforms_cat;
extern const char* const atlas_dat;
}  // namespace lie::data
