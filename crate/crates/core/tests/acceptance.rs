// acceptance criteria suite; populated as modules land
