# src package for the magnetic spectra toolkit
