# Logickernel tests package
