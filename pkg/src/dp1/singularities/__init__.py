"""Local singularity analysis: plane curves, surface double points, 3-fold germs."""
