#pragma once

#include "msfuzzy/document.hpp"
#include "msfuzzy/element_set.hpp"
#include "msfuzzy/error.hpp"
#include "msfuzzy/extensions.hpp"
#include "msfuzzy/fixtures.hpp"
#include "msfuzzy/fuzzy.hpp"
#include "msfuzzy/grade.hpp"
#include "msfuzzy/hom.hpp"
#include "msfuzzy/lattice.hpp"
#include "msfuzzy/lattice_enum.hpp"
#include "msfuzzy/ms_algebra.hpp"
#include "msfuzzy/report.hpp"
#include "msfuzzy/report_io.hpp"
#include "msfuzzy/verifier.hpp"
